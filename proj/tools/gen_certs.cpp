// Regenerates the bundled certificate corpus under data/certs/.
#include <complicial/cert_builder.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace complicial;

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "data/certs";
    std::filesystem::create_directories(dir);
    std::vector<json> certs = certgen::interval_certs();
    for (json& c : certgen::cojoin_certs()) certs.push_back(std::move(c));
    for (auto [n, k] : {std::pair{2, 0}, {2, 1}, {3, 1}}) {
        certs.push_back(certgen::oslash_cert(n, k, delta(0), "point"));
        certs.push_back(certgen::oslash_cert(n, k, delta(1), "interval"));
    }
    for (const json& c : certs) {
        std::filesystem::path p =
            dir / (c.at("name").get<std::string>() + ".cert.json");
        std::ofstream out(p);
        out << c.dump(1) << "\n";
        std::cout << p.string() << "\n";
    }
    return 0;
}
