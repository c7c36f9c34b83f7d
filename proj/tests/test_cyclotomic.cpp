#include <catch2/catch_amalgamated.hpp>

#include "kzeta/cyclotomic.hpp"

#include <random>

using kzeta::Cyclotomic;
using kzeta::Rational;

TEST_CASE("ring operations at small conductors") {
    Cyclotomic i4 = Cyclotomic::zeta(4);
    REQUIRE(i4 * i4 == Cyclotomic(-1));

    Cyclotomic w = Cyclotomic::zeta(3);
    REQUIRE(w + w * w == Cyclotomic(-1));

    // lift of zeta_2 into conductor 4 is -1
    Cyclotomic z2 = Cyclotomic::zeta(2);
    REQUIRE(z2.lifted(4) == Cyclotomic(-1));
    REQUIRE(z2.lifted(4).conductor() == 4);
}

TEST_CASE("division is exact field arithmetic") {
    Cyclotomic w = Cyclotomic::zeta(5);
    Cyclotomic a = Cyclotomic(3) + w * w - w.pow(3);
    REQUIRE(a / a == Cyclotomic(1));
    REQUIRE((Cyclotomic(1) / (Cyclotomic(1) - w)) * (Cyclotomic(1) - w) == Cyclotomic(1));
    REQUIRE_THROWS_AS(a / Cyclotomic(0), kzeta::DivisionByZero);
}

TEST_CASE("conjugation") {
    Cyclotomic z8 = Cyclotomic::zeta(8);
    REQUIRE(z8.conjugate() == z8.pow(7));
    REQUIRE(Cyclotomic(3).conjugate() == Cyclotomic(3));
    Cyclotomic i4 = Cyclotomic::zeta(4);
    REQUIRE((Cyclotomic(1) + i4).conjugate() == Cyclotomic(1) - i4);
    Cyclotomic a = Cyclotomic(2) + z8 - z8.pow(3);
    REQUIRE(a.conjugate().conjugate() == a);
}

TEST_CASE("galois action") {
    Cyclotomic w = Cyclotomic::zeta(5);
    REQUIRE(w.galois(2) == w * w);
    Cyclotomic a = Cyclotomic(1) + Cyclotomic::zeta(3);
    REQUIRE(a.galois(1) == a);
    REQUIRE(a.galois(2) == Cyclotomic(1) + Cyclotomic::zeta(3).pow(2));
    REQUIRE_THROWS_AS(Cyclotomic::zeta(6).galois(2), kzeta::NotCoprime);
}

TEST_CASE("to_rational detects Galois-fixed elements") {
    Cyclotomic w = Cyclotomic::zeta(3);
    auto r = (w + w * w).to_rational();
    REQUIRE(r.has_value());
    REQUIRE(*r == -1);
    REQUIRE_FALSE(Cyclotomic::zeta(4).to_rational().has_value());
    REQUIRE(*Cyclotomic(Rational(7, 2)).to_rational() == Rational(7, 2));
}

TEST_CASE("reduction mod p") {
    REQUIRE(kzeta::reduce_mod_p(Cyclotomic::zeta(4), 2) == 1);
    REQUIRE(kzeta::reduce_mod_p(Cyclotomic(1) + Cyclotomic::zeta(4), 2) == 0);
    Cyclotomic z9 = Cyclotomic::zeta(9);
    REQUIRE(kzeta::reduce_mod_p(Cyclotomic(2) + Cyclotomic(3) * z9 + z9 * z9, 3) == 0);
    REQUIRE_THROWS_AS(kzeta::reduce_mod_p(Cyclotomic::zeta(3), 2), kzeta::NotPrimePowerConductor);
    REQUIRE_THROWS_AS(kzeta::reduce_mod_p(Cyclotomic(Rational(1, 2)), 2), kzeta::NotIntegral);
    // rationals stored at any conductor still reduce
    REQUIRE(kzeta::reduce_mod_p(Cyclotomic(-1).lifted(2), 3) == 2);
}

TEST_CASE("root of unity order") {
    REQUIRE(*Cyclotomic::zeta(8).pow(3).root_of_unity_order() == 8);
    REQUIRE(*Cyclotomic(-1).lifted(3).root_of_unity_order() == 2);
    REQUIRE_FALSE((Cyclotomic(1) + Cyclotomic::zeta(4)).root_of_unity_order().has_value());
}

TEST_CASE("unit vector classification") {
    Cyclotomic zero(0);
    auto r = kzeta::classify_unit_vector({zero, Cyclotomic::zeta(8).pow(3), zero});
    REQUIRE(r.unit);
    REQUIRE(r.index == 1);
    REQUIRE(r.order == 8);

    // (1 + zeta_3, 0) has |.|^2 = 1 and 1 + zeta_3 = -zeta_3^2 of order 6
    auto s = kzeta::classify_unit_vector({Cyclotomic(1) + Cyclotomic::zeta(3), zero});
    REQUIRE(s.unit);
    REQUIRE(s.index == 0);
    REQUIRE(s.order == 6);

    auto t = kzeta::classify_unit_vector({Cyclotomic(1), Cyclotomic(1)});
    REQUIRE_FALSE(t.unit);
    REQUIRE(t.length_sq == Cyclotomic(2));
}

TEST_CASE("textual form round trip") {
    Cyclotomic z8 = Cyclotomic::zeta(8);
    Cyclotomic a = Cyclotomic(1) - z8 * z8;
    REQUIRE(a.str() == "Q(zeta_8): 1 - 1*z^2");
    REQUIRE(Cyclotomic::parse(a.str()) == a);
    REQUIRE(Cyclotomic(0).str() == "Q(zeta_1): 0");

    std::mt19937 rng(20240901);
    std::uniform_int_distribution<long> conductor_pick(1, 24);
    std::uniform_int_distribution<int> coeff_pick(-9, 9);
    std::uniform_int_distribution<int> den_pick(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        long m = conductor_pick(rng);
        Cyclotomic v = Cyclotomic(0).lifted(m);
        for (long j = 0; j < kzeta::euler_phi(m); ++j)
            v += Cyclotomic(Rational(coeff_pick(rng), den_pick(rng))) *
                 Cyclotomic::root_of_unity(m, j).lifted(m);
        REQUIRE(Cyclotomic::parse(v.str()) == v);
    }
}

TEST_CASE("conjugation and galois are ring homomorphisms on random elements") {
    std::mt19937 rng(77017);
    std::uniform_int_distribution<long> conductor_pick(1, 24);
    std::uniform_int_distribution<int> coeff_pick(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        long m = conductor_pick(rng);
        auto make = [&] {
            Cyclotomic v = Cyclotomic(0).lifted(m);
            for (long j = 0; j < kzeta::euler_phi(m); ++j)
                v += Cyclotomic(coeff_pick(rng)) * Cyclotomic::root_of_unity(m, j).lifted(m);
            return v;
        };
        Cyclotomic a = make(), b = make();
        REQUIRE((a * b).conjugate() == a.conjugate() * b.conjugate());
        REQUIRE((a + b).conjugate() == a.conjugate() + b.conjugate());
        long g = 1 + static_cast<long>(rng() % static_cast<unsigned long>(m));
        if (std::gcd(g, m) == 1) {
            REQUIRE((a * b).galois(g) == a.galois(g) * b.galois(g));
            REQUIRE((a + b).galois(g) == a.galois(g) + b.galois(g));
            long h = 1 + static_cast<long>(rng() % static_cast<unsigned long>(m));
            if (std::gcd(h, m) == 1)
                REQUIRE(a.galois(g).galois(h) == a.galois((g * h) % m));
        }
    }
}

TEST_CASE("reduce_mod_p is a ring homomorphism on random integral pairs") {
    std::mt19937 rng(424243);
    std::uniform_int_distribution<int> coeff_pick(-7, 7);
    const long p = 3, m = 9;
    for (int trial = 0; trial < 100; ++trial) {
        auto make = [&] {
            Cyclotomic v = Cyclotomic(0).lifted(m);
            for (long j = 0; j < kzeta::euler_phi(m); ++j)
                v += Cyclotomic(coeff_pick(rng)) * Cyclotomic::root_of_unity(m, j).lifted(m);
            return v;
        };
        Cyclotomic a = make(), b = make();
        REQUIRE(kzeta::reduce_mod_p(a + b, p) ==
                (kzeta::reduce_mod_p(a, p) + kzeta::reduce_mod_p(b, p)) % p);
        REQUIRE(kzeta::reduce_mod_p(a * b, p) ==
                (kzeta::reduce_mod_p(a, p) * kzeta::reduce_mod_p(b, p)) % p);
    }
}

TEST_CASE("classifier property: scaled basis vectors vs non-examples") {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<long> conductor_pick(1, 24);
    std::uniform_int_distribution<std::size_t> dim_pick(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        long m = conductor_pick(rng);
        std::size_t n = dim_pick(rng);
        std::size_t slot = rng() % n;
        long j = static_cast<long>(rng() % static_cast<unsigned long>(m));
        int sign = (rng() % 2 == 0) ? 1 : -1;
        std::vector<Cyclotomic> v(n, Cyclotomic(0));
        v[slot] = Cyclotomic(sign) * Cyclotomic::root_of_unity(m, j);
        auto r = kzeta::classify_unit_vector(v);
        REQUIRE(r.unit);
        REQUIRE(r.index == slot);
        REQUIRE(v[slot].pow(r.order) == Cyclotomic(1));
    }
    for (int trial = 0; trial < 200; ++trial) {
        long m = conductor_pick(rng);
        std::size_t n = dim_pick(rng);
        std::vector<Cyclotomic> v(n, Cyclotomic(0));
        // two nonzero roots of unity, or one entry of norm > 1
        if (n >= 2 && rng() % 2 == 0) {
            v[0] = Cyclotomic::root_of_unity(m, static_cast<long>(rng() % static_cast<unsigned long>(m)));
            v[1] = Cyclotomic::root_of_unity(m, static_cast<long>(rng() % static_cast<unsigned long>(m)));
        } else {
            // |3 + zeta|^2 >= 4, never a unit
            v[0] = Cyclotomic(3) + Cyclotomic::root_of_unity(m, 1).lifted(m);
        }
        auto r = kzeta::classify_unit_vector(v);
        REQUIRE_FALSE(r.unit);
    }
}
