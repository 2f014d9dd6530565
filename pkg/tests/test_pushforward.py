import random
from itertools import product

import pytest

from toricpush import (Decomposition, IntMatrix, build_endo, class_group,
                       decompose_pushforward, degree, h0_class, hirzebruch,
                       iterate_coherence, multiplication_endo, product_fan,
                       projective_space, pullback_divisor, pullback_matrix,
                       validate_fan, verify_decomposition)

P1 = projective_space(1)
P2 = projective_space(2)
P1XP1 = product_fan(P1, P1)
SWAP = build_endo(P1XP1, IntMatrix.from_rows([[0, 1], [2, 0]]))


def ray_class(fan, rho):
    pic = class_group(fan)
    return pic.class_of(tuple(1 if i == rho else 0 for i in range(fan.nrays)))


class TestGoldenDecompositions:
    """Each expected multiset was confirmed by verify_decomposition (the
    projection-formula dimension oracle) before being frozen here."""

    def test_p1_structure_sheaf(self):
        e = multiplication_endo(P1, 2)
        dec = decompose_pushforward(e, (0, 0))
        g = ray_class(P1, 0)
        assert sorted(dec.summands) == sorted([(0,), tuple(-x for x in g)])
        assert verify_decomposition(e, (0, 0), dec, box=2).passed

    def test_p1_degree_one(self):
        e = multiplication_endo(P1, 2)
        dec = decompose_pushforward(e, (1, 0))
        assert sorted(dec.summands) == [(0,), (0,)]
        assert verify_decomposition(e, (1, 0), dec, box=2).passed

    def test_p2_hyperplane(self):
        e = multiplication_endo(P2, 2)
        dec = decompose_pushforward(e, (1, 0, 0))
        g = ray_class(P2, 0)
        expected = sorted([(0,), (0,), (0,), tuple(-x for x in g)])
        assert sorted(dec.summands) == expected
        assert verify_decomposition(e, (1, 0, 0), dec, box=2).passed

    def test_p1xp1_swap_structure_sheaf(self):
        dec = decompose_pushforward(SWAP, (0, 0, 0, 0))
        fiber2 = ray_class(P1XP1, 2)
        expected = sorted([(0, 0), tuple(-x for x in fiber2)])
        assert sorted(dec.summands) == expected
        assert verify_decomposition(SWAP, (0, 0, 0, 0), dec, box=2).passed


class TestVerifyDecomposition:
    def test_corrupted_decomposition_is_caught(self):
        e = multiplication_endo(P2, 2)
        dec = decompose_pushforward(e, (1, 0, 0))
        shifted = tuple(tuple(x + (1 if i == 0 else 0) for x in s)
                        for i, s in enumerate(dec.summands))
        bad = Decomposition(summands=shifted,
                            witness_divisors=dec.witness_divisors,
                            cosets=dec.cosets)
        report = verify_decomposition(e, (1, 0, 0), bad, box=2)
        assert not report.passed
        assert any("twist" in v for v in report.violations)

    def test_wrong_rank_is_caught(self):
        e = multiplication_endo(P1, 2)
        dec = decompose_pushforward(e, (0, 0))
        bad = Decomposition(summands=dec.summands + ((0,),),
                            witness_divisors=dec.witness_divisors + ((0, 0),),
                            cosets=dec.cosets + ((0,),))
        report = verify_decomposition(e, (0, 0), bad, box=1)
        assert not report.passed
        assert any("degree" in v for v in report.violations)

    def test_identity_endo(self):
        ident = multiplication_endo(P2, 1)
        dec = decompose_pushforward(ident, (2, -1, 0))
        pic = class_group(P2)
        assert dec.summands == (pic.class_of((2, -1, 0)),)
        assert verify_decomposition(ident, (2, -1, 0), dec, box=2).passed

    def test_rank_equals_degree(self):
        for endo, coeffs in [(multiplication_endo(P2, 3), (1, -2, 0)),
                             (SWAP, (2, 0, -1, 1))]:
            dec = decompose_pushforward(endo, coeffs)
            assert len(dec.summands) == degree(endo)


class TestStructuralInvariants:
    def test_trivial_summand_law(self, pairs):
        for label, fan, endo in pairs:
            pic = class_group(fan)
            dec = decompose_pushforward(endo, (0,) * fan.nrays)
            trivial = [s for s in dec.summands if s == pic.zero()]
            assert len(trivial) == 1, label
            for s in dec.summands:
                if s != pic.zero():
                    assert h0_class(fan, s) == 0, label

    def test_twist_equivariance(self):
        rng = random.Random(3)
        for endo in (multiplication_endo(P2, 2), SWAP):
            fan = endo.fan
            pic = class_group(fan)
            for _ in range(6):
                coeffs = tuple(rng.randint(-2, 2) for _ in range(fan.nrays))
                twist = tuple(rng.randint(-2, 2) for _ in range(pic.rank))
                # twisting D by f* lift(E) shifts every summand class by E
                twisted = tuple(a + b for a, b in zip(
                    coeffs, pullback_divisor(endo, pic.lift(twist))))
                base = decompose_pushforward(endo, coeffs).summands
                shifted = decompose_pushforward(endo, twisted).summands
                expected = sorted(tuple(a + b for a, b in zip(s, twist))
                                  for s in base)
                assert sorted(shifted) == expected

    def test_coset_representative_independence(self):
        for endo in (multiplication_endo(P2, 2), SWAP):
            fan = endo.fan
            pic = class_group(fan)
            ft = endo.matrix.transpose()
            dec = decompose_pushforward(endo, (1,) * fan.nrays)
            pi_inv = endo.pi_inverse
            for u, cls in zip(dec.cosets, dec.summands):
                for m in product(range(-1, 2), repeat=fan.dim):
                    shifted_u = tuple(a + b for a, b in
                                      zip(u, ft.mul_vector(m)))
                    witness = []
                    for rho_prime in range(fan.nrays):
                        rho = pi_inv[rho_prime]
                        v = fan.rays[rho]
                        num = 1 + sum(x * y for x, y in zip(shifted_u, v))
                        witness.append(num // endo.mults[rho])
                    assert pic.class_of(tuple(witness)) == cls

    def test_ray_relabeling_leaves_verdicts_invariant(self):
        # published outputs must not depend on the basis convention; compare
        # through a basis-free profile: the multiset of h0 values of each
        # witness twisted by every divisor in a permutation-symmetric box
        def profile(fan, endo, coeffs):
            from toricpush import h0
            dec = decompose_pushforward(endo, coeffs)
            return sorted(
                tuple(sorted(h0(fan, tuple(a + b for a, b in zip(w, d)))
                             for d in product((-1, 0, 1), repeat=fan.nrays)))
                for w in dec.witness_divisors)

        fan = hirzebruch(1)
        perm = [2, 0, 3, 1]
        inv = [perm.index(i) for i in range(4)]
        rays = [fan.rays[perm[i]] for i in range(4)]
        cones = [tuple(sorted(inv[i] for i in c)) for c in fan.max_cones]
        refan, report = validate_fan(2, rays, cones)
        assert report.smooth and report.complete
        for q in (2, 3):
            coeffs = (1, 0, -1, 2)
            permuted = tuple(coeffs[perm[i]] for i in range(4))
            assert (profile(fan, multiplication_endo(fan, q), coeffs)
                    == profile(refan, multiplication_endo(refan, q), permuted))


class TestIterateCoherence:
    def test_p1(self):
        assert iterate_coherence(multiplication_endo(P1, 2), (0, 0)).passed

    def test_p2_hyperplane(self):
        assert iterate_coherence(multiplication_endo(P2, 2), (1, 0, 0)).passed

    def test_swap(self):
        assert iterate_coherence(SWAP, (1, -1, 0, 2)).passed

    def test_identity(self):
        assert iterate_coherence(multiplication_endo(P2, 1), (1, 0, 0)).passed

    def test_third_iterate(self):
        assert iterate_coherence(multiplication_endo(P1, 2), (1, 0), k=3).passed
