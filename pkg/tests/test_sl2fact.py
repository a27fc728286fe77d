from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import rank1_monomial, run_partitions_topdown
from qcharlab import InvalidInput, LMonomial, q_factorize, y_string
from qcharlab.sl2fact import in_general_position


def Y(n, i, r, e=1):
    return LMonomial.y(n, i, r, e)


class TestGeneralPosition:
    def test_adjacent_strings_resonate(self):
        # (0,1) next to (2,1): parameter ratio q^-2 is forbidden at p=0
        assert not in_general_position((0, 1), (2, 1))

    def test_far_strings(self):
        assert in_general_position((0, 1), (4, 1))

    def test_equal_singletons(self):
        assert in_general_position((0, 1), (0, 1))


class TestQFactorize:
    def test_contiguous_pair_is_one_string(self):
        assert q_factorize(Y(1, 1, 0) * Y(1, 1, 2)).strings == ((0, 2),)

    def test_separated_pair_stays_split(self):
        assert q_factorize(Y(1, 1, 0) * Y(1, 1, 4)).strings == ((0, 1), (4, 1))

    def test_repeated_row(self):
        assert q_factorize(Y(1, 1, 0, 2)).strings == ((0, 1), (0, 1))

    def test_identity(self):
        assert q_factorize(LMonomial.identity(1)).strings == ()

    def test_rejects_rank_two(self):
        with pytest.raises(InvalidInput):
            q_factorize(Y(2, 1, 0))

    def test_rejects_non_dominant(self):
        with pytest.raises(InvalidInput):
            q_factorize(Y(1, 1, 0, -1))

    def test_json(self):
        assert q_factorize(Y(1, 1, 0) * Y(1, 1, 4)).to_json() == {"strings": [[0, 1], [4, 1]]}

    def test_worked_restriction_example(self):
        # two overlapping strings of different lengths, anchored together,
        # are already in general position
        m = y_string(1, 1, 0, 2) * y_string(1, 1, 0, 4)
        assert q_factorize(m).strings == ((0, 2), (0, 4))

    def test_irreducibility_witness_in_classified_product(self):
        """Restricting an intermediate dominant-chain monomial to the
        resonant node factorizes into the two predicted strings."""
        from qcharlab import (
            KRSpec,
            MinAffSpec,
            classify_normal,
            drinfeld_of_spec,
            family_T,
            restrict,
        )

        spec, kr = MinAffSpec(2, (2, 0), "inc"), KRSpec(2, 2, -4, 2)
        rep = classify_normal(spec, kr)
        assert rep.tag.kind == "case_i" and (rep.tag.p, rep.tag.kprime) == (1, 2)
        # gap moved one node past p keeps the restriction to p dominant
        mu = drinfeld_of_spec(spec) * family_T(kr, 1, rep.tag.p + 1)[1]
        pi = restrict(mu, {rep.tag.p})
        r_p = spec.anchors()[rep.tag.p]
        assert q_factorize(pi).strings == (
            (r_p + 2 * (rep.tag.kprime - 2), 1),
            (r_p, spec.lam[rep.tag.p - 1]),
        )


def _exhaustive_inputs(rows, max_factors):
    for count in range(max_factors + 1):
        for combo in combinations_with_replacement(rows, count):
            counts = {}
            for r in combo:
                counts[r] = counts.get(r, 0) + 1
            yield counts


class TestAgainstBruteForce:
    def test_unique_and_reconstructs_small_grid(self):
        for counts in _exhaustive_inputs(range(-3, 4), 4):
            m = rank1_monomial(counts)
            result = q_factorize(m)
            assert result.expand() == m
            pairs = list(result.strings)
            assert all(
                in_general_position(a, b) for a, b in combinations_with_replacement(pairs, 2) if a is not b
            )
            valid = [
                part
                for part in run_partitions_topdown(counts)
                if all(
                    in_general_position(part[i], part[j])
                    for i in range(len(part))
                    for j in range(i + 1, len(part))
                )
            ]
            assert valid == [result.strings]

    @given(st.lists(st.integers(-5, 7), max_size=6))
    @settings(max_examples=100, deadline=None)
    def test_reconstruction_property(self, rows):
        counts = {}
        for r in rows:
            counts[r] = counts.get(r, 0) + 1
        m = rank1_monomial(counts)
        result = q_factorize(m)
        assert result.expand() == m
