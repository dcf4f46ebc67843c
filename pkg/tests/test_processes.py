import numpy as np
import pytest
from scipy.integrate import quad

from fixtures import bernoulli_pair, example_mixture, random_finite_process
from predpac.domain import DomainGrid, FiniteMixture, Pmf, pmf_expectation
from predpac.errors import ImpossiblePrefix, SizeGuard, UnsupportedProcess
from predpac.processes import (
    IID,
    BetaBernoulli,
    Diagonal,
    FiniteDeFinetti,
    beta_quantile,
    brute_force_conditional,
    conditional_expectation,
    marginal_pmf,
    posterior_weights,
    predictive_pmf,
    prefix_probability,
    process_grid,
    sample_path,
    tail_conditional_expectation,
    update_posterior,
)

GRID_35 = DomainGrid((3.0, 5.0))


class TestSamplePath:
    def test_diagonal_paths_are_constant(self):
        proc = Diagonal.over(GRID_35, [3, 5])
        for seed in range(20):
            path = sample_path(proc, 4, np.random.default_rng(seed))
            assert path.values in ((3.0,) * 4, (5.0,) * 4)

    def test_iid_point_mass(self):
        proc = IID(Pmf.point_mass(DomainGrid((1, 2, 3)), 2))
        assert sample_path(proc, 3, np.random.default_rng(1)).values == (2.0, 2.0, 2.0)

    def test_deterministic_for_fixed_seed(self):
        proc = example_mixture()
        a = sample_path(proc, 30, np.random.default_rng(99))
        b = sample_path(proc, 30, np.random.default_rng(99))
        assert a == b

    def test_realized_component_drives_path(self):
        proc = FiniteDeFinetti(FiniteMixture(
            (Pmf.point_mass(GRID_35, 3), Pmf.point_mass(GRID_35, 5)), (0.5, 0.5)))
        for seed in range(20):
            path = sample_path(proc, 5, np.random.default_rng(seed))
            assert set(path.values) == {(3.0, 5.0)[path.realized_component]}

    def test_beta_bernoulli_binary(self):
        path = sample_path(BetaBernoulli(2, 3), 50, np.random.default_rng(5))
        assert set(path.values) <= {0.0, 1.0}
        assert 0.0 < path.realized_component < 1.0

    def test_iid_matches_single_component_mixture(self):
        pmf = Pmf.from_points((0, 1, 2), (0.2, 0.3, 0.5))
        a = sample_path(IID(pmf), 25, np.random.default_rng(4))
        b = sample_path(FiniteDeFinetti(FiniteMixture((pmf,), (1.0,))), 25, np.random.default_rng(4))
        assert a == b


class TestBetaQuantile:
    @pytest.mark.parametrize("a, b", [(1, 1), (2, 5), (0.5, 0.5), (10, 3)])
    def test_inverts_cdf(self, a, b):
        from scipy.stats import beta

        for u in (0.01, 0.3, 0.5, 0.9):
            assert beta_quantile(a, b, u) == pytest.approx(beta.ppf(u, a, b), abs=1e-12)


class TestPrefixProbability:
    def test_bayes_numerator(self):
        assert prefix_probability(example_mixture(), [0]) == pytest.approx(0.70, abs=1e-15)

    def test_empty_prefix(self):
        assert prefix_probability(example_mixture(), []) == 1.0

    def test_permutation_invariant(self):
        proc = example_mixture()
        assert prefix_probability(proc, [0, 1]) == prefix_probability(proc, [1, 0])

    def test_rejects_beta_bernoulli(self):
        with pytest.raises(UnsupportedProcess):
            prefix_probability(BetaBernoulli(1, 1), [0])

    def test_random_permutations(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            proc = random_finite_process(rng, int(rng.integers(2, 5)), int(rng.integers(1, 4)))
            grid = process_grid(proc)
            prefix = rng.choice(grid.points, size=int(rng.integers(0, 7)))
            base = prefix_probability(proc, prefix)
            for _ in range(5):
                assert abs(prefix_probability(proc, rng.permutation(prefix)) - base) <= 1e-12


class TestPosterior:
    def test_direct_bayes(self):
        np.testing.assert_allclose(posterior_weights(example_mixture(), [0]),
                                   [0.25 / 0.70, 0.45 / 0.70], rtol=1e-14)

    def test_zero_likelihood_eliminates(self):
        grid = DomainGrid((0, 1))
        proc = FiniteDeFinetti(FiniteMixture((Pmf.point_mass(grid, 1), Pmf.point_mass(grid, 0)), (0.5, 0.5)))
        np.testing.assert_array_equal(posterior_weights(proc, [1]), [1.0, 0.0])

    def test_empty_prefix_gives_prior(self):
        proc = FiniteDeFinetti(FiniteMixture(
            (Pmf.uniform(GRID_35), Pmf.point_mass(GRID_35, 3)), (0.3, 0.7)))
        np.testing.assert_allclose(posterior_weights(proc, []), [0.3, 0.7], rtol=1e-15)

    def test_impossible_prefix(self):
        proc = Diagonal.over(GRID_35, [3])
        with pytest.raises(ImpossiblePrefix):
            posterior_weights(proc, [5])
        with pytest.raises(ImpossiblePrefix):
            posterior_weights(proc, [3] * 80 + [5])

    def test_sequential_update_matches_batch(self):
        rng = np.random.default_rng(17)
        checked = 0
        while checked < 300:
            proc = random_finite_process(rng, int(rng.integers(2, 6)), int(rng.integers(1, 4)))
            path = sample_path(proc, int(rng.integers(1, 70)), rng)
            try:
                before = posterior_weights(proc, path.values[:-1])
                stepped = update_posterior(proc, before, path.values[-1])
            except ImpossiblePrefix:
                continue
            np.testing.assert_allclose(stepped, posterior_weights(proc, path.values), atol=1e-12, rtol=0)
            checked += 1

    def test_log_space_survives_long_prefixes(self):
        proc = bernoulli_pair(0.3, 0.35)
        path = [0.0, 1.0] * 1000
        post = posterior_weights(proc, path)
        assert np.all(np.isfinite(post)) and abs(post.sum() - 1.0) < 1e-12

    def test_concentration_on_realized_component(self):
        # total variation 0.3 between the two components
        grid = DomainGrid((0, 1, 2))
        proc = FiniteDeFinetti(FiniteMixture(
            (Pmf(grid, (0.5, 0.3, 0.2)), Pmf(grid, (0.2, 0.3, 0.5))), (0.5, 0.5)))
        rng = np.random.default_rng(2023)
        weights = []
        for _ in range(500):
            path = sample_path(proc, 200, rng)
            weights.append(posterior_weights(proc, path.values)[path.realized_component])
        assert np.mean(weights) >= 0.99


class TestPredictive:
    def test_beta_bernoulli_against_quadrature(self):
        s, n = 2, 3

        def moment(k):
            return quad(lambda t: t ** k * (1 - t) ** (n - s), 0, 1)[0]

        oracle = moment(s + 1) / moment(s)
        assert oracle == pytest.approx(3 / 5, abs=1e-10)
        assert predictive_pmf(BetaBernoulli(1, 1), [1, 1, 0]).probs[1] == pytest.approx(oracle, abs=1e-10)

    @pytest.mark.parametrize("a, b, prefix", [(2.0, 0.5, [0, 0, 1]), (0.7, 3.0, [1] * 6), (1.0, 1.0, [])])
    def test_polya_urn_general(self, a, b, prefix):
        s, n = sum(prefix), len(prefix)
        num = quad(lambda t: t ** (a + s) * (1 - t) ** (b + n - s - 1), 0, 1)[0]
        den = quad(lambda t: t ** (a + s - 1) * (1 - t) ** (b + n - s - 1), 0, 1)[0]
        assert predictive_pmf(BetaBernoulli(a, b), prefix).probs[1] == pytest.approx(num / den, abs=1e-8)

    def test_iid_predictive_is_theta(self):
        pmf = Pmf.from_points((0, 1, 2), (0.2, 0.3, 0.5))
        for prefix in ([], [0], [2, 2, 1, 0]):
            np.testing.assert_allclose(predictive_pmf(IID(pmf), prefix).probs, pmf.probs, rtol=1e-15)

    def test_diagonal_collapses(self):
        assert predictive_pmf(Diagonal.over(GRID_35, [3, 5]), [3]).probs == (1.0, 0.0)

    def test_marginal_is_empty_prefix_predictive(self):
        proc = example_mixture()
        np.testing.assert_allclose(marginal_pmf(proc).probs, predictive_pmf(proc, []).probs, rtol=1e-15)
        assert marginal_pmf(BetaBernoulli(1, 3)).probs == (0.75, 0.25)


class TestConditionalExpectation:
    def test_iid_single_component(self):
        proc = IID(Pmf.uniform(DomainGrid((1, 2, 3, 4))))

        def g(x):
            return abs(int(x >= 4) - int(x >= 3))

        for prefix in ([], [1], [4, 4, 2]):
            assert conditional_expectation(proc, prefix, g) == pytest.approx(0.25, abs=1e-15)

    def test_diagonal_zero(self):
        proc = Diagonal.over(GRID_35, [3, 5])
        assert conditional_expectation(proc, [5, 5, 5], lambda x: float(x != 5)) == 0.0

    def test_posterior_mixture_sum(self):
        got = conditional_expectation(example_mixture(), [0], lambda x: x == 1)
        assert got == pytest.approx(0.25 / 0.70 * 0.5 + 0.45 / 0.70 * 0.1, abs=1e-15)
        assert got == pytest.approx(0.242857142857, abs=1e-12)

    def test_tail_form_agrees(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            proc = random_finite_process(rng, 4, 3)
            path = sample_path(proc, int(rng.integers(0, 10)), rng)
            g = rng.normal(size=4)
            assert tail_conditional_expectation(proc, path, g) == pytest.approx(
                conditional_expectation(proc, path, g), abs=1e-12)

    def test_iid_matches_one_component_mixture(self):
        pmf = Pmf.from_points((0, 1, 2), (0.2, 0.3, 0.5))
        single = FiniteDeFinetti(FiniteMixture((pmf,), (1.0,)))
        g = [1.0, -2.0, 0.5]
        for prefix in ([], [0, 1], [2] * 60):
            assert conditional_expectation(IID(pmf), prefix, g) == conditional_expectation(single, prefix, g)
            assert prefix_probability(IID(pmf), prefix[:6]) == prefix_probability(single, prefix[:6])

    def test_tail_constancy_for_iid(self):
        pmf = Pmf.from_points((0, 1, 2, 3), (0.1, 0.2, 0.3, 0.4))
        g = [0.0, 1.0, 1.0, 0.0]
        expected = pmf_expectation(pmf, g)
        rng = np.random.default_rng(8)
        for _ in range(50):
            prefix = rng.choice(pmf.grid.points, size=int(rng.integers(0, 200)))
            assert conditional_expectation(IID(pmf), prefix, g) == pytest.approx(expected, abs=1e-15)


class TestBruteForce:
    def test_size_guard(self):
        proc = IID(Pmf.uniform(DomainGrid(tuple(range(7)))))
        with pytest.raises(SizeGuard):
            brute_force_conditional(proc, [], lambda x: 1.0)
        with pytest.raises(SizeGuard):
            brute_force_conditional(example_mixture(), [0] * 7, lambda x: 1.0)

    def test_unconditional_case(self):
        proc = example_mixture()
        assert brute_force_conditional(proc, [], lambda x: x == 0) == pytest.approx(0.7, abs=1e-15)

    def test_iid(self):
        pmf = Pmf.from_points((0, 1, 2), (0.2, 0.3, 0.5))
        assert brute_force_conditional(IID(pmf), [2, 1], [1, 1, 0]) == pytest.approx(0.5, abs=1e-15)

    def test_impossible(self):
        with pytest.raises(ImpossiblePrefix):
            brute_force_conditional(Diagonal.over(GRID_35, [3]), [5], lambda x: 1.0)

    def test_agrees_with_posterior_route(self):
        rng = np.random.default_rng(1000)
        done = 0
        while done < 1000:
            proc = random_finite_process(rng, int(rng.integers(1, 7)), int(rng.integers(1, 4)))
            path = sample_path(proc, int(rng.integers(0, 7)), rng)
            g = rng.uniform(-1, 1, size=len(process_grid(proc)))
            assert brute_force_conditional(proc, path, g) == pytest.approx(
                conditional_expectation(proc, path, g), abs=1e-10)
            done += 1
