#pragma once

#include "duality.hpp"
#include "homotopy.hpp"

namespace complicial {

// A small expression language over the shape catalog and the
// constructions; evaluation is deterministic and cached by the
// normalized expression text.
//
//   delta(n) delta_t(n) horn(n,k) sharp(n) eq3 globe(n) boundary(n)
//   spine(n) delta_k(n,k) delta_k_prime(n,k) delta_k_dprime(n,k)
//   join(e,e) gray(e,e) product(e,e) diamond(e,e) cojoin(e,e)
//   susp(e) csusp(e) wedge_r(e) wedge_l(e) trunc(e,n)
//   op(e) co(e) full(e)

struct ExprError : std::runtime_error {
    int pos;
    ExprError(const std::string& m, int at)
        : std::runtime_error(m + " at position " + std::to_string(at)),
          pos(at) {}
};

class ExprEval {
public:
    explicit ExprEval(int co_bound = 3) : co_bound_(co_bound) {}

    StratSet eval(const std::string& text) {
        src_ = text;
        pos_ = 0;
        StratSet v = parse();
        skip_ws();
        if (pos_ != static_cast<int>(src_.size()))
            throw ExprError("trailing input", pos_);
        return v;
    }

private:
    StratSet parse() {
        skip_ws();
        int start = pos_;
        std::string name = ident();
        std::string key = name;
        if (name.empty()) throw ExprError("expected an expression", start);
        auto cached = [&](const std::string& k,
                          const std::function<StratSet()>& mk) {
            auto it = cache_.find(k);
            if (it != cache_.end()) return it->second;
            StratSet v = mk();
            cache_.emplace(k, v);
            return v;
        };
        if (name == "eq3") return delta3_eq();
        if (!accept('(')) {
            throw ExprError("expected '(' after " + name, pos_);
        }
        auto int_arg = [&] {
            skip_ws();
            int v = number();
            return v;
        };
        StratSet out;
        if (name == "delta" || name == "delta_t" || name == "sharp" ||
            name == "globe" || name == "boundary" || name == "spine" ||
            name == "globe_t" || name == "globe_boundary") {
            int n = int_arg();
            expect(')');
            if (name == "delta") out = delta(n);
            else if (name == "delta_t") out = delta_t(n);
            else if (name == "sharp") out = sharp(n);
            else if (name == "globe") out = globe(n);
            else if (name == "globe_t") out = globe_t(n);
            else if (name == "globe_boundary") out = globe_boundary(n);
            else if (name == "boundary") out = boundary_incl(n).boundary;
            else out = spine(n);
        } else if (name == "horn" || name == "delta_k" ||
                   name == "delta_k_prime" || name == "delta_k_dprime") {
            int n = int_arg();
            expect(',');
            int k = int_arg();
            expect(')');
            if (name == "horn") out = horn(n, k).horn;
            else if (name == "delta_k") out = delta_k(n, k);
            else if (name == "delta_k_prime") out = delta_k_prime(n, k);
            else out = delta_k_dprime(n, k);
        } else if (name == "join" || name == "gray" || name == "product" ||
                   name == "diamond" || name == "cojoin") {
            StratSet a = parse();
            expect(',');
            StratSet b = parse();
            expect(')');
            std::string k = src_.substr(static_cast<size_t>(start),
                                        static_cast<size_t>(pos_ - start));
            out = cached(k, [&] {
                if (name == "join") return join(a, b).result;
                if (name == "gray") return gray(a, b).result;
                if (name == "product") return strat_product(a, b).result;
                if (name == "diamond") return diamond(a, b).result;
                return cojoin(a, b).result;
            });
        } else if (name == "susp" || name == "csusp" || name == "op" ||
                   name == "co" || name == "full" || name == "wedge_r" ||
                   name == "wedge_l") {
            StratSet a = parse();
            expect(')');
            std::string k = src_.substr(static_cast<size_t>(start),
                                        static_cast<size_t>(pos_ - start));
            out = cached(k, [&] {
                if (name == "susp") return suspension(a).result;
                if (name == "csusp") return suspension(a, true).result;
                if (name == "op") return op_dual(a);
                if (name == "co") return co_dual(a, co_bound_);
                if (name == "full") return full_dual(a, co_bound_);
                if (name == "wedge_r") return wedge(a, true, delta(1)).result;
                return wedge(a, false, delta(1)).result;
            });
        } else if (name == "homobj") {
            StratSet K = parse();
            expect(',');
            StratSet x = parse();
            expect(',');
            int n = int_arg();
            expect(',');
            std::string kind = ident();
            expect(')');
            HomKind hk = kind == "cartesian"  ? HomKind::Cartesian
                         : kind == "gray_l"   ? HomKind::GrayLeft
                         : kind == "gray_r"   ? HomKind::GrayRight
                         : kind == "join"     ? HomKind::SlashJoin
                                              : throw ExprError(
                                                    "unknown hom kind '" +
                                                        kind + "'",
                                                    pos_);
            out = mapping_object(K, x, n, hk).result;
        } else if (name == "trunc") {
            StratSet a = parse();
            expect(',');
            int n = int_arg();
            expect(')');
            out = truncate(a, n);
        } else {
            throw ExprError("unknown constructor '" + name + "'", start);
        }
        return out;
    }

    void skip_ws() {
        while (pos_ < static_cast<int>(src_.size()) &&
               std::isspace(static_cast<unsigned char>(
                   src_[static_cast<size_t>(pos_)])))
            ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < static_cast<int>(src_.size()) &&
            src_[static_cast<size_t>(pos_)] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ExprError(std::string("expected '") + c + "'", pos_);
    }
    std::string ident() {
        skip_ws();
        int s = pos_;
        while (pos_ < static_cast<int>(src_.size()) &&
               (std::isalnum(static_cast<unsigned char>(
                    src_[static_cast<size_t>(pos_)])) ||
                src_[static_cast<size_t>(pos_)] == '_') &&
               !std::isdigit(static_cast<unsigned char>(
                   src_[static_cast<size_t>(s)])))
            ++pos_;
        return src_.substr(static_cast<size_t>(s),
                           static_cast<size_t>(pos_ - s));
    }
    int number() {
        skip_ws();
        int s = pos_;
        while (pos_ < static_cast<int>(src_.size()) &&
               std::isdigit(static_cast<unsigned char>(
                   src_[static_cast<size_t>(pos_)])))
            ++pos_;
        if (s == pos_) throw ExprError("expected a number", pos_);
        return std::stoi(src_.substr(static_cast<size_t>(s),
                                     static_cast<size_t>(pos_ - s)));
    }

    std::string src_;
    int pos_ = 0;
    int co_bound_;
    std::map<std::string, StratSet> cache_;
};

inline StratSet eval_expr(const std::string& text, int co_bound = 3) {
    ExprEval e(co_bound);
    return e.eval(text);
}

} // namespace complicial
