from fractions import Fraction
from itertools import combinations, permutations

import pytest

from helpers import word
from tribraid import (
    NONTRIVIAL_BY_LINKING,
    NONTRIVIAL_BY_PARITY,
    TRIVIAL_CONSISTENT,
    AdjacencyViolation,
    AnnularInvariants,
    BadTriple,
    CylLetter,
    CylWord,
    DimensionMismatch,
    FullTwistMove,
    GWord,
    MoveProgram,
    NotRealisable,
    annular_invariants,
    classify_word,
    compile_program,
    empty_cyl_word,
    enumerate_states,
    full_twist_program,
    geometric_linking,
    initial_cyclic_order,
    invariants_equal_mod_full_twist,
    kernel_witness,
    pure_braid_generator_program,
    reconstruct_axis,
    signed_index,
    tetra_letters,
)


class TestCyclicOrder:
    def test_initial_orders(self):
        assert initial_cyclic_order(4, 4) == (1, 2, 3)
        assert initial_cyclic_order(4, 1) == (2, 3, 4)
        assert initial_cyclic_order(5, 2) == (3, 4, 5, 1)
        with pytest.raises(BadTriple):
            initial_cyclic_order(4, 5)


class TestCylWord:
    def test_replay_validation(self):
        # ring of three: all pairs adjacent, opposite swaps cancel
        c = CylWord.from_letters(
            4, 4, (CylLetter(1, 2, 1), CylLetter(1, 2, -1))
        )
        assert c.final_order == (1, 2, 3)

    def test_adjacency_violation_on_ring_of_four(self):
        with pytest.raises(AdjacencyViolation):
            CylWord.from_letters(5, 5, (CylLetter(1, 3, 1),))

    def test_wrap_adjacency_allowed(self):
        c = CylWord.from_letters(5, 5, (CylLetter(1, 4, 1),))
        assert c.final_order == (4, 2, 3, 1)

    def test_declared_final_order_checked(self):
        with pytest.raises(AdjacencyViolation):
            CylWord(4, 4, (CylLetter(1, 2, 1),), (1, 2, 3))

    def test_rejects_axis_and_bad_ids(self):
        with pytest.raises(BadTriple):
            CylWord.from_letters(4, 4, (CylLetter(1, 4, 1),))
        with pytest.raises(BadTriple):
            CylWord.from_letters(4, 4, (CylLetter(2, 2, 1),))
        with pytest.raises(BadTriple):
            CylWord.from_letters(4, 4, (CylLetter(1, 2, 2),))

    def test_text_format(self):
        c = CylWord.from_letters(4, 4, (CylLetter(1, 2, 1), CylLetter(1, 2, -1)))
        assert str(c) == "b(1,2,+) b(1,2,-)"


class TestReconstructAxis:
    def test_axis_central_letters_disregarded(self):
        w = word(4, (1, 3, 4), (1, 3, 4))
        c = reconstruct_axis(w, 4)
        assert c.letters == () and c.final_order == (1, 2, 3)

    def test_empty_word(self):
        c = reconstruct_axis(GWord(5), 2)
        assert c.letters == () and c.final_order == (3, 4, 5, 1)

    def test_not_realisable_rejected(self):
        with pytest.raises(NotRealisable):
            reconstruct_axis(word(4, (1, 3, 4), (1, 2, 3)), 4)

    def test_generator_word_axis4(self):
        prog = pure_braid_generator_program(4, 1, 3)
        w = compile_program(prog).word
        inv = annular_invariants(reconstruct_axis(w, 4))
        assert inv.is_identity
        assert inv.linking_of(1, 3) == 1
        assert inv.linking_of(1, 2) == 0 and inv.linking_of(2, 3) == 0


class TestAnnularInvariants:
    def test_empty_is_trivial(self):
        inv = annular_invariants(empty_cyl_word(4, 4))
        assert inv.is_identity
        assert all(v == 0 for _, v in inv.linking)

    def test_opposite_swaps_cancel(self):
        c = CylWord.from_letters(4, 4, (CylLetter(1, 2, 1), CylLetter(1, 2, -1)))
        inv = annular_invariants(c)
        assert inv.is_identity and inv.linking_of(1, 2) == 0

    def test_half_integer_single_swap(self):
        c = CylWord.from_letters(4, 4, (CylLetter(1, 2, 1),))
        inv = annular_invariants(c)
        assert not inv.is_identity
        assert inv.linking_of(1, 2) == Fraction(1, 2)

    def test_text_rendering(self):
        inv = annular_invariants(empty_cyl_word(4, 4))
        text = inv.to_text()
        assert "permutation: ()" in text and "linking:" in text


class TestModFullTwist:
    def _shift(self, inv, m):
        return AnnularInvariants(
            inv.axis,
            inv.strands,
            inv.perm,
            tuple((pair, value + m) for pair, value in inv.linking),
        )

    def test_equal_gives_zero(self):
        inv = annular_invariants(empty_cyl_word(4, 4))
        assert invariants_equal_mod_full_twist(inv, inv) == 0

    def test_uniform_shift_detected(self):
        inv = annular_invariants(empty_cyl_word(4, 4))
        assert invariants_equal_mod_full_twist(inv, self._shift(inv, 1)) == 1
        assert invariants_equal_mod_full_twist(self._shift(inv, 2), inv) == -2

    def test_single_entry_change_rejected(self):
        inv = annular_invariants(empty_cyl_word(4, 4))
        bumped = AnnularInvariants(
            inv.axis,
            inv.strands,
            inv.perm,
            ((inv.linking[0][0], inv.linking[0][1] + 1),) + inv.linking[1:],
        )
        assert invariants_equal_mod_full_twist(inv, bumped) is None

    def test_non_integer_shift_rejected(self):
        inv = annular_invariants(empty_cyl_word(4, 4))
        assert invariants_equal_mod_full_twist(inv, self._shift(inv, Fraction(1, 2))) is None

    def test_mismatched_strands_rejected(self):
        a = annular_invariants(empty_cyl_word(4, 4))
        b = annular_invariants(empty_cyl_word(4, 1))
        with pytest.raises(DimensionMismatch):
            invariants_equal_mod_full_twist(a, b)

    def test_twist_shift_against_geometry(self):
        # appending a full twist shifts every geometric linking number by one
        # but adds no letters, so the reconstruction lags by exactly m twists
        prog = pure_braid_generator_program(4, 1, 3)
        twisted = MoveProgram(prog.initial, prog.moves + (FullTwistMove(1),), closed=True)
        w = compile_program(twisted).word
        inv = annular_invariants(reconstruct_axis(w, 4))
        geometric = AnnularInvariants(
            inv.axis,
            inv.strands,
            inv.perm,
            tuple(
                (pair, geometric_linking(twisted, *pair)) for pair, _ in inv.linking
            ),
        )
        assert invariants_equal_mod_full_twist(inv, geometric) == 1


class TestKernelWitness:
    def test_empty_word_consistent(self):
        assert kernel_witness(GWord(4)).kind == TRIVIAL_CONSISTENT

    def test_full_twist_word_consistent(self):
        w = compile_program(full_twist_program(4, 2)).word
        assert w == GWord(4)
        assert kernel_witness(w).kind == TRIVIAL_CONSISTENT

    def test_odd_word_by_parity(self):
        assert kernel_witness(word(4, (1, 2, 3))).kind == NONTRIVIAL_BY_PARITY

    def test_generators_by_linking(self):
        for i, j in combinations(range(1, 5), 2):
            w = compile_program(pure_braid_generator_program(4, i, j)).word
            v = kernel_witness(w)
            assert v.kind == NONTRIVIAL_BY_LINKING
            assert v.axis is not None and v.pair is not None

    def test_requires_realisable(self):
        with pytest.raises(NotRealisable):
            kernel_witness(word(4, (1, 3, 4), (1, 2, 3)))


class TestTetraSurvivors:
    def test_one_or_three_survivors_in_good_windows(self):
        # in a window whose four letters are all good, the letters holding
        # the axis with a non-axis central number 1 or 3; the lone survivor
        # carries identical (inner, outer, sign) on both sides, and with 3
        # survivors the per-pair signed sums agree.
        checked = 0
        for s in enumerate_states(4):
            for tup in permutations((1, 2, 3, 4)):
                lhs = GWord(4, tetra_letters(4, tup))
                rhs = GWord(4, tuple(reversed(lhs.letters)))
                cl = classify_word(lhs, start=s)
                cr = classify_word(rhs, start=s)
                if not (cl.realisable and cr.realisable):
                    continue
                checked += 1
                for axis in range(1, 5):
                    def swaps(cw):
                        out = []
                        for g, st, pre in zip(
                            cw.word.letters, cw.statuses, cw.prefix_states
                        ):
                            if axis not in g.elems:
                                continue
                            (c,) = st.centrals
                            if c == axis:
                                continue
                            (outer,) = (e for e in g.elems if e not in (axis, c))
                            out.append((c, outer, signed_index(pre, axis, outer, c)))
                        return out

                    sw_l, sw_r = swaps(cl), swaps(cr)
                    assert len(sw_l) == len(sw_r)
                    assert len(sw_l) in (1, 3)
                    if len(sw_l) == 1:
                        assert sw_l == sw_r
                    else:
                        def pair_sums(sw):
                            sums = {}
                            for inner, outer, sign in sw:
                                key = tuple(sorted((inner, outer)))
                                sums[key] = sums.get(key, 0) + sign
                            return sums

                        assert pair_sums(sw_l) == pair_sums(sw_r)
        assert checked == 192  # the all-good windows


class TestAxisInsideLinkedPair:
    def test_ray_winding_shows_half_integers(self):
        # when the axis strand participates in the linking, rays from it
        # complete full revolutions: swap counts go odd, sums go half-integer,
        # and the final order returns only as a cyclic rotation
        w = compile_program(pure_braid_generator_program(4, 1, 3)).word
        inv = annular_invariants(reconstruct_axis(w, 1))
        assert not inv.is_identity
        assert inv.linking_of(2, 3) == Fraction(-1, 2)
