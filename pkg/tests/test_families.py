import itertools

import pytest

from orcov import (
    CapacityError,
    SetFamily,
    enumerate_mifs,
    extend_to_maximal,
    find_disjoint_pair,
    hosten_morris,
    is_intersecting,
    is_maximal_intersecting,
    sorted_mif_masks,
    upward_closure,
)
from orcov.families import (
    LITERATURE_LAMBDA,
    capacity,
    format_subset,
    lambda_provenance,
)

LAMBDA_SMALL = {1: 1, 2: 2, 3: 4, 4: 12, 5: 81, 6: 2646}


def star(k: int, i: int) -> SetFamily:
    return SetFamily.from_masks(
        k, [s for s in range(1 << k) if (s >> (i - 1)) & 1]
    )


def apply_perm(k: int, member: int, perm: dict[int, int]) -> int:
    out = 0
    for s in range(1 << k):
        if (member >> s) & 1:
            image = 0
            for i in range(1, k + 1):
                if (s >> (i - 1)) & 1:
                    image |= 1 << (perm[i] - 1)
            out |= 1 << image
    return out


class TestPredicates:
    def test_empty_set_breaks_intersecting(self):
        assert not is_intersecting(SetFamily.from_sets(2, [()]))

    def test_star_is_intersecting(self):
        assert is_intersecting(star(3, 1))

    def test_disjoint_pair_breaks_intersecting(self):
        assert not is_intersecting(SetFamily.from_sets(2, [{1}, {2}]))

    def test_maximal_examples(self):
        assert is_maximal_intersecting(SetFamily.from_sets(2, [{1}, {1, 2}]))
        assert not is_maximal_intersecting(SetFamily.from_sets(2, [{1, 2}]))
        big = SetFamily.from_masks(3, [s for s in range(8) if s.bit_count() >= 2])
        assert is_maximal_intersecting(big)

    def test_maximal_matches_brute_definition_k3(self):
        # no intersecting proper superset, checked literally
        for member in range(1 << 8):
            f = SetFamily(3, member)
            if not is_intersecting(f):
                continue
            extendable = any(
                s != 0 and s not in f and all(s & m for m in f.members())
                for s in range(8)
            )
            assert is_maximal_intersecting(f) == (not extendable)


class TestClosure:
    def test_upward_closure_examples(self):
        assert upward_closure(SetFamily.from_sets(2, [{1}])) == SetFamily.from_sets(
            2, [{1}, {1, 2}]
        )
        full = SetFamily(2, 0b1111)
        assert upward_closure(full) == full
        assert upward_closure(SetFamily.from_sets(3, [{1, 2}])) == SetFamily.from_sets(
            3, [{1, 2}, {1, 2, 3}]
        )

    def test_upward_closure_is_least_fixed_point(self):
        for member in range(1 << 8):
            f = SetFamily(3, member)
            c = upward_closure(f)
            assert c.member & member == member
            assert upward_closure(c) == c
            for s in c.members():
                assert any((s | m) == s for m in f.members())

    def test_extend_to_maximal_examples(self):
        assert extend_to_maximal(SetFamily.from_sets(2, [{1}])) == SetFamily.from_sets(
            2, [{1}, {1, 2}]
        )
        assert extend_to_maximal(SetFamily(1, 0)) == SetFamily.from_sets(1, [{1}])
        got = extend_to_maximal(SetFamily.from_sets(3, [{1, 2}]))
        assert got.size == 4
        assert SetFamily.from_sets(3, [{1, 2}]).member & got.member
        assert is_maximal_intersecting(got)

    def test_extend_rejects_non_intersecting(self):
        with pytest.raises(ValueError, match="not intersecting"):
            extend_to_maximal(SetFamily.from_sets(2, [{1}, {2}]))

    def test_extension_contains_input_everywhere_k4(self):
        for member in range(0, 1 << 16, 257):
            f = SetFamily(4, member)
            if not is_intersecting(f):
                continue
            g = extend_to_maximal(f)
            assert g.member & f.member == f.member
            assert is_maximal_intersecting(g)


class TestEnumeration:
    def test_k1(self):
        cat = enumerate_mifs(1)
        assert cat.count == 1
        assert cat.families[0] == SetFamily.from_sets(1, [{1}])

    def test_k2_exact(self):
        cat = enumerate_mifs(2)
        assert cat.families == (
            SetFamily.from_sets(2, [{1}, {1, 2}]),
            SetFamily.from_sets(2, [{2}, {1, 2}]),
        )

    def test_k3_exact(self):
        cat = enumerate_mifs(3)
        want = {star(3, i).member for i in (1, 2, 3)}
        want.add(sum(1 << s for s in range(8) if s.bit_count() >= 2))
        assert {f.member for f in cat.families} == want

    @pytest.mark.parametrize("k,count", sorted(LAMBDA_SMALL.items()))
    def test_counts(self, k, count):
        assert enumerate_mifs(k).count == count
        assert hosten_morris(k) == count

    def test_canonical_order_strictly_increasing(self):
        for k in range(1, 6):
            masks = sorted_mif_masks(k)
            assert all(a < b for a, b in zip(masks, masks[1:]))

    def test_lambda_strictly_increasing(self):
        values = [hosten_morris(k) for k in range(1, 7)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_capacity_guard(self, monkeypatch):
        monkeypatch.setenv("ORCOV_KMAX", "3")
        assert capacity() == 3
        with pytest.raises(CapacityError, match="k <= 3"):
            enumerate_mifs(4)
        monkeypatch.setenv("ORCOV_KMAX", "99")
        assert capacity() == 7

    def test_literature_values(self):
        with pytest.raises(CapacityError, match="literature"):
            hosten_morris(9)
        v9 = hosten_morris(9, literature_table=True)
        assert v9 == LITERATURE_LAMBDA[9]
        assert 10**20 < v9 < 10**21
        assert hosten_morris(8, literature_table=True) == LITERATURE_LAMBDA[8]
        with pytest.raises(CapacityError):
            hosten_morris(10, literature_table=True)
        with pytest.raises(ValueError):
            hosten_morris(0)

    def test_provenance_labels(self):
        assert lambda_provenance(7) == "computed"
        assert lambda_provenance(9) == "literature"

    def test_reverse_pair_order_self_consistent_k5(self):
        from orcov import _kernel

        assert _kernel.mif_count(5) == _kernel.mif_count(5, reverse_pairs=True) == 81


class TestMifInvariants:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_structure(self, k):
        full = (1 << k) - 1
        for f in enumerate_mifs(k).families:
            assert f.size == 1 << (k - 1)
            assert full in f
            assert 0 not in f
            assert upward_closure(f) == f
            for s in range(1 << k):
                assert (s in f) != ((full ^ s) in f)
            assert is_intersecting(f)

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_all_stars_present(self, k):
        members = {f.member for f in enumerate_mifs(k).families}
        for i in range(1, k + 1):
            assert star(k, i).member in members

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_permutation_closure(self, k):
        members = {f.member for f in enumerate_mifs(k).families}
        for perm_tuple in itertools.permutations(range(1, k + 1)):
            perm = dict(zip(range(1, k + 1), perm_tuple))
            for m in members:
                assert apply_perm(k, m, perm) in members


class TestPairChoiceOracle:
    """Second independent count: pick one side of every complementary
    pair outright (2^(2^(k-1)) choices) and keep the upward-closed
    results.  No propagation, no search order; feasible through k = 5.
    """

    @staticmethod
    def _count_by_pair_choice(k: int) -> int:
        size = 1 << k
        full = size - 1
        pairs = sorted(
            {(min(s, full ^ s), max(s, full ^ s)) for s in range(size)}
        )
        count = 0
        for choice in range(1 << len(pairs)):
            member = 0
            for i, (lo, hi) in enumerate(pairs):
                member |= 1 << (hi if (choice >> i) & 1 else lo)
            up_closed = True
            for s in range(size):
                if (member >> s) & 1:
                    t = s
                    while t != full:
                        t = (t + 1) | s
                        if not (member >> t) & 1:
                            up_closed = False
                            break
                if not up_closed:
                    break
            if up_closed:
                count += 1
        return count

    @pytest.mark.parametrize("k,count", [(1, 1), (2, 2), (3, 4), (4, 12), (5, 81)])
    def test_matches_enumeration(self, k, count):
        assert self._count_by_pair_choice(k) == count == hosten_morris(k)


class TestDisjointPair:
    def test_example_k2(self):
        f1 = SetFamily.from_sets(2, [{1}, {1, 2}])
        f2 = SetFamily.from_sets(2, [{2}, {1, 2}])
        assert find_disjoint_pair(f1, f2) == (0b01, 0b10)

    def test_stars_k3(self):
        s, t = find_disjoint_pair(star(3, 1), star(3, 2))
        assert s & 1 and t & 2 and s & t == 0
        assert s in star(3, 1) and t in star(3, 2)

    def test_identical_rejected(self):
        with pytest.raises(ValueError, match="identical"):
            find_disjoint_pair(star(3, 1), star(3, 1))

    def test_non_maximal_rejected(self):
        f = SetFamily.from_sets(2, [{1, 2}])
        with pytest.raises(ValueError, match="maximal"):
            find_disjoint_pair(f, star(2, 1))

    def test_always_disjoint_over_catalog(self):
        fams = enumerate_mifs(4).families
        for f1, f2 in itertools.combinations(fams, 2):
            s, t = find_disjoint_pair(f1, f2)
            assert s & t == 0
            assert s in f1 and t in f2


class TestSerialization:
    def test_format_subset(self):
        assert format_subset(0) == "{}"
        assert format_subset(0b101) == "{1,3}"

    def test_family_format(self):
        assert SetFamily.from_sets(2, [{1}, {1, 2}]).format() == "{1}{1,2}"
        assert SetFamily.from_sets(2, [{2}, {1, 2}]).format() == "{2}{1,2}"

    def test_from_sets_validates(self):
        with pytest.raises(ValueError):
            SetFamily.from_sets(2, [{3}])
        with pytest.raises(ValueError):
            SetFamily.from_masks(2, [4])
        with pytest.raises(ValueError):
            SetFamily(2, 1 << 16)
