"""Default options of wbsense."""
from wbsense.api.utils.parameter_list import ParameterList, ParameterSection


def global_parameters():
    """Return a new ParameterList with the default options.

    The object stored in ``wbsense.api.global_parameters`` is created by
    this function. Call it again to obtain an independent set of options
    that can be passed to solvers via their ``parameters`` argument.

    """

    return ParameterList([
        ParameterSection(
            'optimization',
            feasibility_tolerance=1E-8,
            kkt_tolerance=1E-6,
            max_iterations=200,
            initial_barrier=1.0,
            barrier_decrease=10.0,
            duality_gap=1E-9,
            newton_tolerance=1E-20,
            armijo_slope=0.25,
            backtracking_factor=0.5,
            scalar_tolerance=1E-13),
        ParameterSection(
            'baseline',
            interval_tolerance=1E-10),
        ParameterSection(
            'oracle',
            scalar_tolerance=1E-13,
            grid_points=21,
            grid_refinements=60),
        ParameterSection(
            'simulation',
            sample_model='real',
            domain='frequency',
            block_size=256,
            workers=1),
        ParameterSection(
            'validation',
            tolerance=0.015,
            clt_samples_warning=30),
        ParameterSection(
            'sweep',
            steps=25,
            epsilon_range=[0.5, 2.0],
            delta_range=[2100.0, 3500.0]),
    ])
