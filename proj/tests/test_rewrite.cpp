#include <catch2/catch_amalgamated.hpp>
#include <vector>

#include "cla/a0.hpp"
#include "cla/fock.hpp"
#include "cla/rewrite.hpp"

using namespace cla;

namespace {

AlgebraElement el(Word w, Rat c = Rat(1)) { return AlgebraElement(std::move(w), std::move(c)); }

// The three defining relations as elements that must normalize to zero.
std::vector<AlgebraElement> relation_instances(long M) {
    std::vector<AlgebraElement> out;
    for (long m = -M; m <= M; ++m) {
        for (long n = -M; n <= M; ++n) {
            out.push_back(el({Y(m), Y(n)}) + el({Y(n + 1), Y(m - 1)}));
            out.push_back(el({Ys(m), Ys(n)}) + el({Ys(n + 1), Ys(m - 1)}));
            AlgebraElement r = el({Y(m), Ys(n)}) + el({Ys(n - 1), Y(m + 1)});
            if (m + n == 0) r -= AlgebraElement::one();
            out.push_back(r);
        }
    }
    return out;
}

// All words over {Y, Ys} with indices in [-M, M], length <= len.
std::vector<Word> all_words(long M, long len) {
    std::vector<Word> out{Word{}};
    std::size_t lo = 0;
    for (long l = 1; l <= len; ++l) {
        std::size_t hi = out.size();
        for (std::size_t i = lo; i < hi; ++i) {
            for (long n = -M; n <= M; ++n) {
                for (Kind k : {Kind::Y, Kind::Ystar}) {
                    Word w = out[i];
                    w.push_back({k, n});
                    out.push_back(std::move(w));
                }
            }
        }
        lo = hi;
    }
    return out;
}

}  // namespace

TEST_CASE("normal form basics") {
    CHECK(nf1(el({Y(0), Y(0)})) == el({Y(1), Y(-1)}, Rat(-1)));
    CHECK(nf1(el({Y(2), Y(1)})).is_zero());
    CHECK(nf1(el({Ys(0), Y(0)})) == AlgebraElement::one() - el({Y(-1), Ys(1)}));
    CHECK(nf1(el({Y(5)})) == el({Y(5)}));
    CHECK(nf1(AlgebraElement::one()) == AlgebraElement::one());
}

TEST_CASE("is_normal1 recognizes the basis shape") {
    CHECK(is_normal1({Y(1), Y(-1)}));
    CHECK_FALSE(is_normal1({Y(0), Y(0)}));
    CHECK(is_normal1({Y(0), Ys(0)}));
    CHECK_FALSE(is_normal1({Ys(0), Y(0)}));
    CHECK(is_normal1({Y(3), Y(1), Ys(2), Ys(0)}));
    CHECK_FALSE(is_normal1({Y(3), Y(2)}));
    CHECK(is_normal1({}));
}

TEST_CASE("equality oracle") {
    CHECK(equal(el({Y(0), Y(0)}), el({Y(1), Y(-1)}, Rat(-1))));
    CHECK(equal(el({Y(2), Y(1)}), AlgebraElement::zero()));
    CHECK_FALSE(equal(el({Y(0)}), el({Y(1)})));
}

TEST_CASE("nf1 output is normal, idempotent, degree-preserving") {
    for (const auto& w : all_words(2, 3)) {
        AlgebraElement n = nf1(el(w));
        for (const auto& [u, c] : n.terms()) {
            CHECK(is_normal1(u));
            CHECK(degree(u) == degree(w));
        }
        CHECK(nf1(n) == n);
    }
}

TEST_CASE("defining relations normalize to zero") {
    for (const auto& r : relation_instances(5)) CHECK(nf1(r).is_zero());
}

TEST_CASE("theta and tau preserve the relation ideal") {
    for (const auto& r : relation_instances(5)) {
        CHECK(nf1(theta(r)).is_zero());
        CHECK(nf1(tau(r, Rat(2))).is_zero());
        CHECK(nf1(tau(r, rat(-1, 3))).is_zero());
    }
}

TEST_CASE("nf1 commutes with the degree derivation") {
    for (const auto& w : all_words(2, 3)) {
        AlgebraElement e = el(w);
        CHECK(nf1(d_derivation(e)) == d_derivation(nf1(e)));
    }
}

TEST_CASE("nf1 is sound against the polynomial realization") {
    // e and nf1(e) act identically on low-degree monomials
    std::vector<FockPolynomial> probes{FockPolynomial::one(), FockPolynomial::var(1),
                                       FockPolynomial::var(2),
                                       FockPolynomial::var(1) * FockPolynomial::var(1),
                                       FockPolynomial::var(3) * FockPolynomial::var(1)};
    auto act = [&](const AlgebraElement& e, const FockPolynomial& P) {
        FockPolynomial out;
        for (const auto& [w, c] : e.terms()) out += c * apply_word(w, P, Rat(1));
        return out;
    };
    for (const auto& w : all_words(3, 2)) {
        AlgebraElement e = el(w);
        AlgebraElement n = nf1(e);
        for (const auto& P : probes) CHECK(act(e, P) == act(n, P));
    }
}

TEST_CASE("overlap ambiguities resolve (spot checks)") {
    auto r = check_overlap(OverlapFamily::YYY, 1, 1, 1);
    CHECK(r.agree);
    CHECK(r.left_first == el({Y(3), Y(1), Y(-1)}, Rat(-1)));
    CHECK(check_overlap(OverlapFamily::YsYY, 0, 0, 0).agree);
    CHECK(check_overlap(OverlapFamily::YsYsY, 0, 0, 0).agree);
    CHECK(check_overlap(OverlapFamily::YsYsYs, 0, 0, 0).agree);
    CHECK_THROWS_AS(check_overlap(OverlapFamily::YYY, 5, 0, 0), std::invalid_argument);
}

TEST_CASE("confluence over a window") {
    const long W = 4;  // the acceptance run widens this to 6
    for (long i1 = -W; i1 <= W; ++i1) {
        for (long i2 = -W; i2 <= W; ++i2) {
            for (long i3 = -W; i3 <= W; ++i3) {
                for (OverlapFamily f : {OverlapFamily::YYY, OverlapFamily::YsYY,
                                        OverlapFamily::YsYsY, OverlapFamily::YsYsYs}) {
                    bool ok;
                    switch (f) {
                        case OverlapFamily::YsYY: ok = i2 <= i3 + 1; break;
                        case OverlapFamily::YsYsY: ok = i1 <= i2 + 1; break;
                        default: ok = i1 <= i2 + 1 && i2 <= i3 + 1; break;
                    }
                    if (!ok) continue;
                    CHECK(check_overlap(f, i1, i2, i3).agree);
                }
            }
        }
    }
}

TEST_CASE("degree-zero reduction") {
    CHECK(reduce_A0(el({Y(0), Ys(0)})) == GroupAlgebraElement::one());
    CHECK(reduce_A0(el({Y(-1), Ys(1)})).is_zero());
    CHECK(reduce_A0(el({Y(0), Y(0)})) == GroupAlgebraElement(2));
    CHECK(reduce_A0(el({Ys(0), Ys(0), Ys(0)})) == GroupAlgebraElement(-3));
    for (long m = 0; m <= 4; ++m)
        CHECK(reduce_A0(el({Y(m), Ys(-m)})) == GroupAlgebraElement::one());
    for (long m = -4; m < 0; ++m) CHECK(reduce_A0(el({Y(m), Ys(-m)})).is_zero());
    CHECK_THROWS_AS(reduce_A0(el({Y(1)})), std::invalid_argument);
}

TEST_CASE("reduce_A0 is multiplicative on degree-0 words") {
    std::vector<Word> zero_words;
    for (const auto& w : all_words(2, 2))
        if (degree(w) == 0) zero_words.push_back(w);
    for (const auto& u : zero_words) {
        for (const auto& v : zero_words) {
            GroupAlgebraElement lhs = reduce_A0(el(u) * el(v));
            GroupAlgebraElement rhs = reduce_A0(el(u)) * reduce_A0(el(v));
            CHECK(lhs == rhs);
        }
    }
}
