"""Cross validation of the interior-point solver with independent methods."""
import unittest
import numpy as np


def _relative(first, second):
    return abs(first - second) / max(1.0, abs(second))


class TestDualBisection(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        from wbsense.api.optimization import oracle_solve
        from wbsense.api.scenarios import eight_bands

        cls.spec = eight_bands()
        cls.p2 = oracle_solve(cls.spec, 'p2')
        cls.p3 = oracle_solve(cls.spec, 'p3')

    def test_eight_bands_throughput_agreement(self):
        from wbsense.api.optimization import solve_p2

        solution = solve_p2(self.spec)
        self.assertEqual(self.p2.method, 'dual-bisection')
        self.assertTrue(self.p2.is_optimal)
        self.assertLess(_relative(solution.objective, self.p2.objective), 1E-6)

    def test_eight_bands_interference_agreement(self):
        from wbsense.api.optimization import solve_p3

        solution = solve_p3(self.spec)
        self.assertTrue(self.p3.is_optimal)
        self.assertLess(_relative(solution.objective, self.p3.objective), 1E-6)

    def test_constraint_active(self):
        self.assertAlmostEqual(self.p2.interference[0], 1.25, delta=1E-6)
        self.assertGreater(self.p2.multipliers.constraint[0], 0)

    def test_slack_budget_gives_upper_corner(self):
        from wbsense.api.optimization import oracle_solve

        solution = oracle_solve(self.spec.with_epsilon(10.0), 'p2')
        np.testing.assert_array_equal(solution.gamma.gamma, self.spec.bounds()[1])
        np.testing.assert_array_equal(solution.multipliers.constraint, [0])

    def test_infeasible(self):
        from wbsense.api.optimization import oracle_solve

        self.assertEqual(oracle_solve(self.spec.with_epsilon(0.5), 'p1').status, 'infeasible')

    def test_stationary_multipliers(self):
        from wbsense.api.optimization.standard_form import StandardForm

        form = StandardForm(self.spec, 'p2')
        multipliers = form.stationary_multipliers(self.p2.gamma.gamma)
        self.assertLess(_relative(multipliers[0], self.p2.multipliers.constraint[0]), 1E-6)
        np.testing.assert_array_equal(form.stationary_multipliers(self.spec.bounds()[1]), [0])

    def test_band_minimizer(self):
        from wbsense.api.optimization.standard_form import StandardForm

        form = StandardForm(self.spec, 'p2')
        weight = self.p2.multipliers.constraint[0]
        for index in range(self.spec.num_subchannels):
            gamma = form.band_minimizer(index, weight, 1E-13)
            self.assertAlmostEqual(gamma, self.p2.gamma.gamma[index], delta=1E-8)
        self.assertEqual(form.band_minimizer(0, 0.0, 1E-13), form.upper[0])

    def test_agreement_with_sequential_quadratic_programming(self):
        from scipy.optimize import minimize

        spec = self.spec
        lower, upper = spec.bounds()
        width = upper - lower
        scale = np.sum(spec.rate)

        def objective(t):
            return np.dot(spec.rate, spec.pf(lower + width * t)) / scale

        def budget(t):
            return spec.epsilon[0] - spec.total_interference(lower + width * t)

        # Start from the best feasible point of a coarse uniform grid.
        grid = np.linspace(0, 1, 101)
        feasible = [t for t in grid if budget(t * np.ones(8)) >= 0]
        start = max(feasible) * np.ones(8)
        result = minimize(objective, start, method='SLSQP', bounds=[(0, 1)] * 8,
                          constraints=[{'type': 'ineq', 'fun': budget}],
                          options={'ftol': 1E-14, 'maxiter': 500})
        throughput = spec.throughput(lower + width * np.clip(result.x, 0, 1))
        self.assertGreaterEqual(budget(result.x), -1E-7)
        self.assertLess(_relative(throughput, self.p2.objective), 1E-5)


class TestRandomInstances(unittest.TestCase):

    def test_solver_agrees_with_oracle(self):
        from wbsense.api.optimization import oracle_solve, solve_p2, solve_p3
        from wbsense.api.scenarios import random_spec

        rng = np.random.default_rng(20240)
        for _ in range(100):
            spec = random_spec(rng, max_subchannels=8)
            for problem, solve in [('p2', solve_p2), ('p3', solve_p3)]:
                solution = solve(spec)
                reference = oracle_solve(spec, problem)
                self.assertTrue(solution.is_optimal, msg=repr(spec))
                self.assertLess(_relative(solution.objective, reference.objective), 1E-5,
                                msg=repr(spec))
                self.assertGreaterEqual(np.min(solution.slacks), -1E-8)


class TestGridRefinement(unittest.TestCase):

    def test_two_groups(self):
        from wbsense.api.optimization import PrimaryUserGroup, oracle_solve, solve_p2
        from wbsense.api.scenarios import eight_bands

        spec = eight_bands()
        spec = spec.replace(subchannels=spec.subchannels[:3],
                            groups=[PrimaryUserGroup([0, 1], 0.5),
                                    PrimaryUserGroup([1, 2], 0.6)])
        reference = oracle_solve(spec, 'p2')
        solution = solve_p2(spec)
        self.assertEqual(reference.method, 'grid-refinement')
        self.assertTrue(solution.is_optimal)
        self.assertLess(_relative(solution.objective, reference.objective), 1E-4)
        self.assertTrue(np.all(reference.slacks >= 0))

    def test_too_many_subchannels(self):
        from wbsense.api.optimization import PrimaryUserGroup, oracle_solve
        from wbsense.api.scenarios import eight_bands

        spec = eight_bands().replace(groups=[PrimaryUserGroup([0, 1], 1.0),
                                        PrimaryUserGroup([2, 3], 1.0)])
        with self.assertRaises(ValueError):
            oracle_solve(spec, 'p2')


class TestKKTResidual(unittest.TestCase):

    def test_oracle_certificate(self):
        from wbsense.api.optimization import kkt_residual, oracle_solve
        from wbsense.api.scenarios import eight_bands

        spec = eight_bands()
        solution = oracle_solve(spec, 'p2')
        self.assertLessEqual(kkt_residual(spec, solution.gamma, solution.multipliers, 'p2'),
                             1E-6)

    def test_upper_corner_with_slack_budget(self):
        from wbsense.api.optimization import Multipliers, kkt_residual
        from wbsense.api.scenarios import eight_bands

        spec = eight_bands(epsilon=5.0)
        upper = spec.bounds()[1]
        self.assertLessEqual(kkt_residual(spec, upper, Multipliers([0.0]), 'p2'), 1E-9)
        self.assertLessEqual(kkt_residual(spec, upper), 1E-9)

    def test_perturbed_optimum(self):
        from wbsense.api.optimization import kkt_residual, solve_p2
        from wbsense.api.optimization.solution import Multipliers
        from wbsense.api.scenarios import eight_bands

        spec = eight_bands()
        solution = solve_p2(spec)
        lower, upper = spec.bounds()
        gamma = solution.gamma.gamma.copy()
        interior = np.flatnonzero((gamma - lower > 0.2) & (upper - gamma > 0.2))
        self.assertGreater(len(interior), 0)
        gamma[interior[0]] += 0.1
        multipliers = Multipliers(solution.multipliers.constraint)
        self.assertGreater(kkt_residual(spec, gamma, multipliers, 'p2'), 1E-3)


if __name__ == "__main__":
    from unittest import main
    main()
