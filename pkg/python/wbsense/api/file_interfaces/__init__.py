__all__ = ['Scenario', 'load_scenario', 'save_scenario', 'scenario_from_dict',
           'scenario_to_dict', 'write_csv', 'read_csv', 'write_plot_data', 'format_table',
           'solution_table', 'write_solution', 'energies_table', 'read_thresholds']

from .scenario import Scenario, load_scenario, save_scenario
from .scenario import scenario_from_dict, scenario_to_dict
from .tables import write_csv, read_csv, write_plot_data, format_table
from .tables import solution_table, write_solution, energies_table, read_thresholds
