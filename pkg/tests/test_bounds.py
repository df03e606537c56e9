import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from restrictedsums.bounds import (
    SweepConfig,
    classify_equality,
    collect_sweep,
    eval_bound,
    run_sweep,
    unrank_combination,
    verify_corollary_coverage,
    verify_even_cyclic_theorem,
    verify_l3_theorem,
    verify_odd_linear_theorem,
    verify_torsionfree,
)
from restrictedsums.domain import PrimeField
from restrictedsums.errors import InputError, TheoremViolation


class TestEvalBound:
    def test_conjecture_examples(self):
        assert eval_bound("conjecture-linear", (3, 3, 3)) == 5
        assert eval_bound("conjecture-cyclic", (3, 3, 3)) == 1
        assert eval_bound("conjecture-cyclic", (2, 2, 2)) == -2

    def test_parity_shapes(self):
        # linear: +1 for even n, +2 for odd; cyclic: +1 even, -2 odd
        assert eval_bound("conjecture-linear", (4, 4)) == 5
        assert eval_bound("conjecture-linear", (4, 4, 4)) == 8
        assert eval_bound("conjecture-cyclic", (4, 4)) == 5
        assert eval_bound("conjecture-cyclic", (4, 4, 4)) == 4

    def test_min_with_torsion(self):
        assert eval_bound("conjecture-linear", (5, 5, 5), torsion=7) == 7
        assert eval_bound("conjecture-linear", (5, 5, 5), torsion=13) == 11
        assert eval_bound("l3", (3, 3, 3), torsion=3) == 3
        assert eval_bound("l3", (3, 3, 3), torsion=7) == 5
        assert eval_bound("pair-distinct", (4, 5), torsion=5) == 5
        assert eval_bound("pair-distinct", (4, 5), torsion=11) == 7

    def test_theorem_bounds_have_no_min(self):
        assert eval_bound("even-cyclic", (3, 3, 3, 3)) == 5
        assert eval_bound("odd-linear", (3, 3, 3)) == 5

    def test_torsionfree_matches_conjecture_at_infinity(self):
        for n in range(2, 7):
            sizes = (4,) * n
            assert eval_bound("torsionfree-linear", sizes) == \
                eval_bound("conjecture-linear", sizes)
            assert eval_bound("torsionfree-cyclic", sizes) == \
                eval_bound("conjecture-cyclic", sizes)

    def test_arity_errors(self):
        with pytest.raises(InputError):
            eval_bound("l3", (3, 3))
        with pytest.raises(InputError):
            eval_bound("even-cyclic", (3, 3, 3))
        with pytest.raises(InputError):
            eval_bound("odd-linear", (3, 3))
        with pytest.raises(InputError):
            eval_bound("pair-distinct", (3, 3, 3))
        with pytest.raises(InputError):
            eval_bound("no-such-bound", (3, 3))


class TestL3Theorem:
    def test_small_equality(self):
        rep = verify_l3_theorem(PrimeField(5), [0, 1], [0, 1], [0, 1])
        assert rep.bound == 2
        assert rep.actual == 2
        assert rep.verdict == "equality"
        assert rep.witness == (1, 2)

    def test_ap_equality(self):
        rep = verify_l3_theorem(PrimeField(7), [0, 1, 2], [0, 1, 2], [0, 1, 2])
        assert rep.bound == 5 and rep.actual == 5
        assert rep.verdict == "equality"

    def test_bound_capped_by_p(self):
        rep = verify_l3_theorem(PrimeField(3), [0, 1, 2], [0, 1, 2], [0, 1, 2])
        assert rep.bound == 3
        assert rep.actual == 3
        assert rep.verdict == "equality"

    def test_hypothesis_gate(self):
        rep = verify_l3_theorem(PrimeField(7), [0], [1, 2], [3, 4])
        assert rep.verdict == "skipped"
        assert "hypotheses" in rep.reason
        rep = verify_l3_theorem(PrimeField(7), [0, 1], [0, 1, 2, 3], [3, 4])
        assert rep.verdict == "skipped"

    def test_exhaustive_p5(self):
        field = PrimeField(5)
        subsets = [list(c) for k in range(2, 6)
                   for c in itertools.combinations(range(5), k)]
        for a1 in subsets:
            for a2 in subsets:
                if len(a2) - len(a1) not in (0, 1):
                    continue
                for a3 in subsets:
                    rep = verify_l3_theorem(field, a1, a2, a3)
                    assert rep.verdict in ("holds", "equality")


class TestParityTheorems:
    def test_even_example(self):
        rep = verify_even_cyclic_theorem(PrimeField(5), [[0, 1, 2]] * 2)
        assert rep.bound == 3 and rep.actual == 3
        assert rep.verdict == "equality"

    def test_even_n4(self):
        rep = verify_even_cyclic_theorem(PrimeField(11), [[0, 1]] * 4)
        assert rep.bound == 1 and rep.actual == 1
        rep = verify_even_cyclic_theorem(PrimeField(13), [[0, 1, 2]] * 4)
        assert rep.bound == 5
        assert rep.verdict in ("holds", "equality")

    def test_odd_examples(self):
        rep = verify_odd_linear_theorem(PrimeField(7), [[0, 1, 2]] * 3)
        assert rep.bound == 5 and rep.actual == 5
        rep = verify_odd_linear_theorem(PrimeField(11), [[0, 1]] * 5)
        assert rep.bound == 2 and rep.actual == 2
        rep = verify_odd_linear_theorem(PrimeField(5), [[0, 1]] * 3)
        assert rep.bound == 2 and rep.actual == 2

    def test_hypothesis_gates(self):
        assert verify_even_cyclic_theorem(PrimeField(5), [[0, 1]] * 3).verdict == "skipped"
        assert verify_odd_linear_theorem(PrimeField(5), [[0, 1]] * 4).verdict == "skipped"
        # characteristic too small: p <= sum - 2n
        rep = verify_even_cyclic_theorem(PrimeField(3), [list(range(3))] * 4)
        assert rep.verdict == "skipped"
        assert "characteristic" in rep.reason
        # unequal sizes
        rep = verify_even_cyclic_theorem(PrimeField(11), [[0, 1], [0, 1, 2]])
        assert rep.verdict == "skipped"


class TestTorsionfree:
    def test_linear_ap(self):
        rep = verify_torsionfree([0, 1, 2], 4, "linear")
        assert rep.bound == 5 and rep.actual == 5
        assert rep.verdict == "equality"

    def test_cyclic_triple(self):
        rep = verify_torsionfree([0, 1, 5], 3, "cyclic")
        assert rep.bound == 1 and rep.actual == 1

    def test_vacuous_bound_clamps(self):
        rep = verify_torsionfree([0, 1], 3, "cyclic")
        assert rep.bound == -2
        assert rep.actual == 0
        assert rep.verdict == "holds"

    def test_lattice_dim2(self):
        rep = verify_torsionfree([(0, 0), (1, 1), (2, 2)], 3, "linear", dim=2)
        assert rep.bound == 5 and rep.actual == 5

    def test_input_validation(self):
        with pytest.raises(InputError):
            verify_torsionfree([0, 1, 2], 1, "linear")
        with pytest.raises(InputError):
            verify_torsionfree([0], 3, "linear")
        with pytest.raises(InputError):
            verify_torsionfree([0, 1, 2], 3, "plain")


class TestClassifyEquality:
    def test_ap_equality(self):
        assert classify_equality([0, 2, 4], 4, "linear") == "ap-equality"
        assert classify_equality([0, 2, 4], 5, "cyclic") == "ap-equality"

    def test_exceptional_three_set_five(self):
        assert classify_equality([0, 1, 5], 5, "cyclic") == "exceptional-k3n5"

    def test_strict(self):
        assert classify_equality([0, 1, 3, 7], 4, "linear") == "strict"
        assert classify_equality([0, 1, 5], 4, "cyclic") == "strict"

    def test_hypothesis_gates(self):
        with pytest.raises(InputError):
            classify_equality([0, 1], 4, "linear")
        with pytest.raises(InputError):
            classify_equality([0, 1, 2], 2, "linear")

    def test_structural_equalities_raise_loudly(self):
        # |C(A,A,A)| equals the bound for EVERY 3- or 4-element A: with
        # |A| = 3 all admissible triples are permutations of A, and with
        # |A| = 4 the pairwise-distinct sums are S - x for the four x in A.
        # The characterization theorem claims these must be APs, so the
        # classifier reports them as loud violations.
        with pytest.raises(TheoremViolation):
            classify_equality([0, 1, 3], 3, "cyclic")
        with pytest.raises(TheoremViolation):
            classify_equality([0, 1, 2, 4], 3, "cyclic")

    def test_ap_always_equality_full_grid(self):
        for k in range(3, 9):
            for n in range(3, 9):
                a = [2 * i for i in range(k)]
                for kind in ("linear", "cyclic"):
                    assert classify_equality(a, n, kind) == "ap-equality"


class TestCorollary:
    def test_examples(self):
        assert verify_corollary_coverage(PrimeField(7), [0, 1, 2, 3]) is True
        assert verify_corollary_coverage(PrimeField(2), [0, 1]) is True

    def test_all_triples_mod_5(self):
        field = PrimeField(5)
        for a in itertools.combinations(range(5), 3):
            assert verify_corollary_coverage(field, a) is True

    def test_size_hypothesis_skips(self):
        assert verify_corollary_coverage(PrimeField(7), [0, 1, 2]) is None


class TestUnranking:
    @given(st.integers(1, 12), st.integers(0, 12))
    def test_matches_lexicographic_enumeration(self, n, k):
        k = min(k, n)
        combos = list(itertools.combinations(range(n), k))
        for rank, want in enumerate(combos):
            assert unrank_combination(rank, n, k) == want

    def test_rank_out_of_range(self):
        assert math.comb(5, 2) == 10
        with pytest.raises(InputError):
            unrank_combination(10, 5, 2)


class TestSweeps:
    def test_conjecture_sweep_p5(self):
        cfg = SweepConfig(check="conjecture", domain="zp", primes=(5,),
                          n_values=(3,), sizes=(3,), kinds=("cyclic",))
        reports, summary = collect_sweep(cfg)
        assert summary.violation_count == 0
        assert summary.instances == 10 ** 3  # C(5,3)=10 per slot
        assert all(r.check == "conjecture" for r in reports)

    def test_empty_ranges_give_empty_report(self):
        cfg = SweepConfig(check="conjecture", domain="zp", primes=(5,),
                          n_values=(), sizes=(3,))
        reports, summary = collect_sweep(cfg)
        assert reports == [] and summary.instances == 0

    def test_n1_is_skipped_with_reason(self):
        cfg = SweepConfig(check="conjecture", domain="zp", primes=(3,),
                          n_values=(1,), sizes=(2,))
        reports, summary = collect_sweep(cfg)
        assert summary.verdicts == {"skipped": 1}
        assert "n=1" in reports[0].reason

    def test_sampling_is_deterministic(self):
        cfg = SweepConfig(check="conjecture", domain="zp", primes=(7,),
                          n_values=(3,), sizes=(3,), kinds=("linear",),
                          cell_cap=1000, sample_size=200, seed=99)
        r1, s1 = collect_sweep(cfg)
        r2, s2 = collect_sweep(cfg)
        assert [r.record() for r in r1] == [r.record() for r in r2]
        assert s1.record() == s2.record()
        assert s1.cells[0]["mode"] == "sampled"
        assert s1.instances == 200

    def test_seed_changes_sample(self):
        base = dict(check="conjecture", domain="zp", primes=(7,),
                    n_values=(3,), sizes=(3,), kinds=("linear",),
                    cell_cap=1000, sample_size=50)
        r1, _ = collect_sweep(SweepConfig(seed=1, **base))
        r2, _ = collect_sweep(SweepConfig(seed=2, **base))
        assert [r.record() for r in r1] != [r.record() for r in r2]

    def test_equality_sweep_matches_direct_classification(self):
        cfg = SweepConfig(check="equality", domain="int", window=(0, 7),
                          sizes=(3,), n_values=(4,), kinds=("linear", "cyclic"))
        reports, summary = collect_sweep(cfg)
        assert summary.violation_count == 0
        aps = [a for a in itertools.combinations(range(8), 3)
               if a[1] - a[0] == a[2] - a[1]]
        assert summary.verdicts["ap-equality"] == 2 * len(aps)
        assert summary.instances == 2 * math.comb(8, 3)

    def test_equality_sweep_surfaces_structural_cyclic_n3(self):
        # the forced cyclic equalities at n=3 (see TestClassifyEquality)
        # surface as violated records carrying their witness family
        cfg = SweepConfig(check="equality", domain="int", window=(0, 5),
                          sizes=(3,), n_values=(3,), kinds=("cyclic",))
        reports, summary = collect_sweep(cfg)
        aps = [a for a in itertools.combinations(range(6), 3)
               if a[1] - a[0] == a[2] - a[1]]
        non_ap = math.comb(6, 3) - len(aps)
        assert summary.verdicts["violated"] == non_ap
        assert summary.verdicts["ap-equality"] == len(aps)
        assert len(summary.violations) == non_ap
        assert all(v["verdict"] == "violated" for v in summary.violations)

    def test_corollary_sweep(self):
        cfg = SweepConfig(check="corollary", domain="zp", primes=(2, 3, 5))
        reports, summary = collect_sweep(cfg)
        assert summary.violation_count == 0
        # every instance covers the whole field, i.e. hits the bound p
        assert all(r.actual == int(r.domain.split("_")[1]) for r in reports)

    def test_parity_sweep_skips_small_characteristic(self):
        cfg = SweepConfig(check="even-cyclic", domain="zp", primes=(3,),
                          n_values=(4,), sizes=(3,))
        reports, summary = collect_sweep(cfg)
        assert summary.instances == 0
        assert any(c["mode"] == "skipped-hypothesis" for c in summary.cells)

    def test_l3_sweep_counts(self):
        cfg = SweepConfig(check="l3", domain="zp", primes=(3,))
        reports, summary = collect_sweep(cfg)
        # p=3: (k1,k2) in {(2,2),(2,3),(3,3)} x k3 in {2,3}
        want = (3 * 3 + 3 * 1 + 1 * 1) * (3 + 1)
        assert summary.instances == want
        assert summary.violation_count == 0

    def test_unknown_check(self):
        with pytest.raises(InputError):
            run_sweep(SweepConfig(check="nonsense"))

    def test_conjecture_consistency_mixed_sizes(self):
        # exploratory: sampled mixed-size families over F_7 and F_11 never
        # dip below the conjectured bounds
        cfg = SweepConfig(check="conjecture", domain="zp", primes=(7, 11),
                          n_values=(2, 3, 4), sizes=(2, 3, 4, 5),
                          cell_cap=300, sample_size=40, seed=20240601)
        _, summary = collect_sweep(cfg)
        assert summary.violation_count == 0
        assert summary.instances > 5_000

    def test_conjecture_consistency_int_window(self):
        cfg = SweepConfig(check="conjecture", domain="int", window=(0, 6),
                          n_values=(2, 3), sizes=(2, 3),
                          cell_cap=400, sample_size=60, seed=7)
        _, summary = collect_sweep(cfg)
        assert summary.violation_count == 0


class TestReportRecords:
    def test_record_shape(self):
        rep = verify_l3_theorem(PrimeField(5), [0, 1], [0, 1], [0, 1])
        rec = rep.record()
        assert rec == {
            "check": "l3",
            "domain": "F_5",
            "kind": "linear",
            "family": [[0, 1], [0, 1], [0, 1]],
            "bound": 2,
            "actual": 2,
            "verdict": "equality",
            "witness": [1, 2],
        }
        assert rep.passed

    def test_skipped_record_carries_reason(self):
        rep = verify_l3_theorem(PrimeField(5), [0], [0], [0, 1])
        assert rep.record()["reason"] == "hypotheses not met"
