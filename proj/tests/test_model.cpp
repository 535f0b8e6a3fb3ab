#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreath/model.hpp"
#include "wreath/errors.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <set>

using namespace wreath;

namespace {

ModelMatrix identity_matrix(const InvolutionBasis& basis) {
    std::vector<int> rows(basis.dimension());
    std::vector<CyclotomicInt> coeffs(basis.dimension(), CyclotomicInt(basis.r(), 1));
    for (int i = 0; i < basis.dimension(); ++i) rows[i] = i;
    return ModelMatrix(basis.r(), std::move(rows), std::move(coeffs));
}

} // namespace

TEST_CASE("model matrices on the involution basis") {
    const InvolutionBasis& basis = involution_basis(2, 2);
    CHECK(basis.dimension() == 6);

    ModelMatrix id = model_matrix(basis, ColoredPermutation::identity(2, 2));
    CHECK(id == identity_matrix(basis));
    CHECK(id.trace() == CyclotomicInt(2, 6));

    // exhaustive homomorphism check over all 64 pairs of B_2
    auto elements = enumerate_group(2, 2);
    for (const auto& g : elements)
        for (const auto& h : elements)
            CHECK(multiply(model_matrix(basis, g), model_matrix(basis, h)) ==
                  model_matrix(basis, multiply(g, h)));
}

TEST_CASE("coefficients are signed root powers") {
    const InvolutionBasis& basis = involution_basis(2, 3);
    for (const auto& g : enumerate_group(2, 3)) {
        ModelMatrix m = model_matrix(basis, g);
        for (int col = 0; col < basis.dimension(); ++col) {
            const CyclotomicInt& c = m.coeff(col);
            bool recognised = false;
            for (int a = 0; a < 2 && !recognised; ++a)
                recognised = c == CyclotomicInt::root_power(2, a) ||
                             c == -CyclotomicInt::root_power(2, a);
            CHECK(recognised);
        }
    }
}

TEST_CASE("auxiliary matrices") {
    const InvolutionBasis& basis = involution_basis(3, 2);
    CHECK(model_matrix(basis, ColoredPermutation::identity(3, 2), ModelVariant::color_only) ==
          identity_matrix(basis));

    // homomorphism for all pairs of G(3,2)
    auto elements = enumerate_group(3, 2);
    for (const auto& g : elements)
        for (const auto& h : elements)
            CHECK(multiply(model_matrix(basis, g, ModelVariant::color_only),
                           model_matrix(basis, h, ModelVariant::color_only)) ==
                  model_matrix(basis, multiply(g, h), ModelVariant::color_only));

    // for r = 2 the two variants differ columnwise by the inversion sign
    const InvolutionBasis& b2 = involution_basis(2, 3);
    for (const auto& g : enumerate_group(2, 3)) {
        ModelMatrix full = model_matrix(b2, g, ModelVariant::inversion_signed);
        ModelMatrix plain = model_matrix(b2, g, ModelVariant::color_only);
        for (int col = 0; col < b2.dimension(); ++col) {
            CHECK(full.row(col) == plain.row(col));
            const ColoredPermutation& v = b2.elements()[col];
            CyclotomicInt expected =
                inv_v(g, v) % 2 == 0 ? plain.coeff(col) : -plain.coeff(col);
            CHECK(full.coeff(col) == expected);
        }
    }
}

TEST_CASE("literal (-1)^<g,v> variant is not a homomorphism when r = 3") {
    // the sign (-1)^(<g,v> mod 3) read verbatim breaks multiplicativity
    const InvolutionBasis& basis = involution_basis(3, 2);
    auto signed_matrix = [&](const ColoredPermutation& g) {
        std::vector<int> rows(basis.dimension());
        std::vector<CyclotomicInt> coeffs;
        for (int col = 0; col < basis.dimension(); ++col) {
            const ColoredPermutation& v = basis.elements()[col];
            rows[col] = basis.index_of(absolute_conjugate(g, v));
            coeffs.push_back(CyclotomicInt(3, pairing(g, v) % 2 == 0 ? 1 : -1));
        }
        return ModelMatrix(3, std::move(rows), std::move(coeffs));
    };
    bool broken = false;
    auto elements = enumerate_group(3, 2);
    for (const auto& g : elements) {
        for (const auto& h : elements) {
            if (!(multiply(signed_matrix(g), signed_matrix(h)) ==
                  signed_matrix(multiply(g, h)))) {
                broken = true;
                break;
            }
        }
        if (broken) break;
    }
    CHECK(broken);
}

TEST_CASE("homomorphism exhaustive on groups up to 200 elements") {
    for (auto [r, n] : {std::pair{1, 4}, std::pair{2, 3}}) {
        const InvolutionBasis& basis = involution_basis(r, n);
        auto elements = enumerate_group(r, n);
        for (const auto& g : elements)
            for (const auto& h : elements)
                CHECK(multiply(model_matrix(basis, g), model_matrix(basis, h)) ==
                      model_matrix(basis, multiply(g, h)));
    }
}

TEST_CASE("random homomorphism pairs at larger sizes") {
    for (auto [r, n] : {std::pair{2, 4}, std::pair{3, 3}}) {
        const InvolutionBasis& basis = involution_basis(r, n);
        auto elements = enumerate_group(r, n);
        auto gen = testutil::rng(2024u + static_cast<unsigned>(r * 10 + n));
        for (int trial = 0; trial < 500; ++trial) {
            const auto& g = testutil::sample(elements, gen);
            const auto& h = testutil::sample(elements, gen);
            CHECK(multiply(model_matrix(basis, g), model_matrix(basis, h)) ==
                  model_matrix(basis, multiply(g, h)));
        }
    }
    // 10^4 pairs at the largest group below 4000 elements
    const InvolutionBasis& basis = involution_basis(2, 5);
    auto elements = enumerate_group(2, 5);
    auto gen = testutil::rng(40961);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto& g = testutil::sample(elements, gen);
        const auto& h = testutil::sample(elements, gen);
        CHECK(multiply(model_matrix(basis, g), model_matrix(basis, h)) ==
              model_matrix(basis, multiply(g, h)));
    }
}

TEST_CASE("block structure: conjugation preserves the symmetric class") {
    auto gen = testutil::rng(99);
    auto elements = enumerate_group(2, 4);
    for (const auto& v : enumerate_absolute_involutions(2, 4)) {
        SymmetricClassLabel label = symmetric_class_of(v);
        for (int trial = 0; trial < 20; ++trial)
            CHECK(symmetric_class_of(absolute_conjugate(testutil::sample(elements, gen), v)) ==
                  label);
    }
}

TEST_CASE("model character traces") {
    ClassFunction chi = model_character(2, 3, ModelVariant::inversion_signed);
    CHECK(chi.degree() == CyclotomicInt(2, 20));  // |I(2,3)| = 20

    // Gelfand property: every irreducible appears exactly once
    for (auto [r, n] : {std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        ClassFunction model = model_character(r, n, ModelVariant::inversion_signed);
        for (const auto& irr : irreducible_characters(r, n))
            CHECK(inner_product(model, irr) == 1);
    }

    // restriction splits the trace over symmetric classes
    ClassFunction total(2, 3);
    for (const auto& label : enumerate_symmetric_classes(2, 3))
        total += model_character(2, 3, ModelVariant::inversion_signed, label);
    CHECK(total == chi);

    CHECK_THROWS_AS(model_character(2, 12, ModelVariant::inversion_signed), LimitError);
}

TEST_CASE("model character of a class counts its members at the identity") {
    SymmetricClassLabel label{2, 4, {0, 0}, {1, 1}};
    ClassFunction chi = model_character(2, 4, ModelVariant::inversion_signed, label);
    CHECK(chi.degree() == CyclotomicInt(2, class_size(label)));
}

TEST_CASE("decompose_class on closed-form examples") {
    // identity class of B_3: single summand (iota_3, empty)
    SymmetricClassLabel identity_label{2, 3, {3, 0}, {0, 0}};
    ClassDecomposition dec = decompose_class(identity_label, ModelVariant::inversion_signed);
    CHECK(dec.verified);
    REQUIRE(dec.summands.size() == 1);
    CHECK(dec.summands[0].first ==
          MultiPartition(std::vector<Partition>{Partition({3}), Partition()}));
    CHECK(dec.summands[0].second == 1);

    // every class of G(3,3)
    for (const auto& label : enumerate_symmetric_classes(3, 3)) {
        ClassDecomposition d = decompose_class(label, ModelVariant::inversion_signed);
        CHECK(d.verified);
        std::set<MultiPartition> got;
        for (const auto& [mu, mult] : d.summands) {
            CHECK(mult == 1);
            got.insert(mu);
        }
        auto predicted = shapes_of_class(label);
        CHECK(got == std::set<MultiPartition>(predicted.begin(), predicted.end()));
    }
}

TEST_CASE("no-fixed-point submodule checks at small parameters") {
    // phi on B_2: M_1 decomposes as rho_((2),empty) + rho_(empty,(2))
    ClassFunction m1(2, 2);
    for (const auto& label : enumerate_symmetric_classes(2, 2)) {
        bool fixed_free = label.fixed[0] == 0 && label.fixed[1] == 0;
        if (fixed_free) m1 += model_character(2, 2, ModelVariant::color_only, label);
    }
    const auto& fer = multipartitions(2, 2);
    const auto& chars = irreducible_characters(2, 2);
    for (std::size_t i = 0; i < fer.size(); ++i) {
        bool even_rows = true;
        for (const auto& comp : fer[i].components())
            for (int part : comp.parts())
                if (part % 2 == 1) even_rows = false;
        CHECK(inner_product(m1, chars[i]) == (even_rows ? 1 : 0));
    }

    NoFixedPointReport phi_report = no_fixed_point_module_check(2, 1, ModelVariant::color_only);
    CHECK(phi_report.ok);
    NoFixedPointReport rho_report =
        no_fixed_point_module_check(2, 1, ModelVariant::inversion_signed);
    CHECK(rho_report.ok);

    // m = 0: trivial one-dimensional module
    CHECK(no_fixed_point_module_check(2, 0, ModelVariant::color_only).ok);

    // r = 3, m = 1: even-row multipartitions of Fer(3,2) are the three (2)-slots
    NoFixedPointReport r3 = no_fixed_point_module_check(3, 1, ModelVariant::color_only);
    CHECK(r3.ok);
    CHECK(no_fixed_point_module_check(3, 1, ModelVariant::inversion_signed).ok);
}

TEST_CASE("one-row modules spanned by color-class sums, 2m = 4") {
    // trace over {C_S : |S| = 2 p0} of phi equals the (iota_2p0, iota_2p1) character
    int n = 4;
    const ConjClassTable& table = conj_classes(2, n);
    for (int p0 = 0; p0 <= 2; ++p0) {
        ClassFunction chi(2, n);
        for (std::size_t c = 0; c < table.classes().size(); ++c) {
            const ColoredPermutation& g = table.classes()[c].representative;
            CyclotomicInt total(2);
            for (int mask = 0; mask < (1 << n); ++mask) {
                if (__builtin_popcount(static_cast<unsigned>(mask)) != 2 * p0) continue;
                int image_mask = 0;
                int colored_sum = 0;
                for (int i = 0; i < n; ++i) {
                    if (mask & (1 << i)) image_mask |= 1 << g.images()[i];
                    else colored_sum += g.colors()[i];
                }
                if (image_mask == mask)
                    total += CyclotomicInt(2, colored_sum % 2 == 0 ? 1 : -1);
            }
            chi.at_index(static_cast<int>(c)) = total;
        }
        MultiPartition rows(
            std::vector<Partition>{single_row(2 * p0), single_row(2 * (2 - p0))});
        CHECK(chi == irreducible_character(2, rows));
    }
}

TEST_CASE("degenerate group G(r,0)") {
    const InvolutionBasis& basis = involution_basis(3, 0);
    CHECK(basis.dimension() == 1);
    ClassFunction chi = model_character(3, 0, ModelVariant::inversion_signed);
    CHECK(chi.degree() == CyclotomicInt(3, 1));
    SymmetricClassLabel empty_label{3, 0, {0, 0, 0}, {0, 0, 0}};
    ClassDecomposition dec = decompose_class(empty_label, ModelVariant::inversion_signed);
    CHECK(dec.verified);
    CHECK(dec.summands.size() == 1);
}
