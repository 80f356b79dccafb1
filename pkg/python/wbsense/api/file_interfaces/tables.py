"""Flat tables: CSV files, whitespace-delimited plot data and console output."""
import numpy as _np


def format_value(value):
    """Return a locale independent text form of a table entry.

    Floats are written with ``repr`` so that identical values always give
    identical text; NaN becomes 'nan'.

    """
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, _np.bool_)):
        return str(int(value))
    if isinstance(value, (int, _np.integer)):
        return str(int(value))
    value = float(value)
    if _np.isnan(value):
        return 'nan'
    return repr(value)


def write_csv(file_name, header, rows):
    """Write a table with a header row to a CSV file.

    Parameters
    ----------
    file_name : string
        Name of the output file.
    header : list of str
        Column names.
    rows : iterable of sequences
        One sequence of values per row, in the order of the header.

    """
    import csv

    with open(file_name, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            if len(row) != len(header):
                raise ValueError("Row has {0} entries, the header {1}.".format(
                    len(row), len(header)))
            writer.writerow([format_value(value) for value in row])


def read_csv(file_name):
    """Read a CSV file written by :func:`write_csv`.

    Returns
    -------
    header : list of str
    rows : list of list of str

    """
    import csv

    with open(file_name, newline='') as f:
        reader = csv.reader(f)
        header = next(reader)
        return header, [row for row in reader]


def write_plot_data(file_name, header, rows):
    """Write numeric columns as whitespace-delimited plot data.

    The header is written as a comment line starting with '#'. Columns
    whose values are not numbers (e.g. a status) must be removed by the
    caller.

    """
    with open(file_name, 'w') as f:
        f.write('# ' + ' '.join(header) + '\n')
        for row in rows:
            f.write(' '.join(format_value(value) for value in row) + '\n')


def format_table(header, rows, highlight=None):
    """Return a table as aligned text for the console.

    Parameters
    ----------
    header : list of str
        Column names.
    rows : list of sequences
        Table entries; floats are shown with six significant digits.
    highlight : callable
        Optional function ``highlight(index, line)`` that returns the
        (possibly decorated) text of row ``index``.

    """

    def show(value):
        if isinstance(value, str):
            return value
        if isinstance(value, (int, _np.integer)) and not isinstance(value, bool):
            return str(value)
        return '{0:.6g}'.format(float(value))

    cells = [[show(value) for value in row] for row in rows]
    widths = [max([len(name)] + [len(row[column]) for row in cells])
              for column, name in enumerate(header)]
    lines = ['  '.join(name.rjust(width) for name, width in zip(header, widths))]
    for index, row in enumerate(cells):
        line = '  '.join(cell.rjust(width) for cell, width in zip(row, widths))
        lines.append(highlight(index, line) if highlight is not None else line)
    return '\n'.join(lines)


def solution_table(solution):
    """Return header and rows of the per-subchannel results of a Solution."""
    header = ['subchannel', 'gamma', 'pf', 'pm']
    rows = [[index, gamma, pf, pm] for index, (gamma, pf, pm) in
            enumerate(zip(solution.gamma.gamma, solution.pf, solution.pm))]
    return header, rows


def write_solution(solution, file_name):
    """Write a Solution as JSON and its per-subchannel table as CSV.

    The table is written next to the JSON file with the extension '.csv'.

    Returns
    -------
    table_name : string
        Name of the CSV file.

    """
    import json
    import os

    with open(file_name, 'w') as f:
        json.dump(solution.as_dict(), f, indent=2, sort_keys=True)
        f.write('\n')
    table_name = os.path.splitext(file_name)[0] + '.csv'
    header, rows = solution_table(solution)
    write_csv(table_name, header, rows)
    return table_name


def energies_table(batch):
    """Return header and rows of the per-trial energies of a TrialBatch."""
    header = ['trial'] + ['energy_{0}'.format(k) for k in range(batch.num_subchannels)]
    rows = [[trial] + list(values) for trial, values in enumerate(batch.energies)]
    return header, rows


def read_thresholds(file_name):
    """Read thresholds from a JSON or CSV file.

    JSON files may hold a list of numbers or an object with a 'gamma'
    list (e.g. a solution written by :func:`write_solution`). CSV files
    need a 'gamma' column.

    """
    import json
    import os
    from wbsense.api.utils.exceptions import ScenarioParseError

    try:
        if os.path.splitext(file_name)[1].lower() == '.csv':
            header, rows = read_csv(file_name)
            if 'gamma' not in header:
                raise ScenarioParseError("no 'gamma' column in {0}".format(file_name), 'gamma')
            column = header.index('gamma')
            values = [row[column] for row in rows]
        else:
            with open(file_name) as f:
                data = json.load(f)
            values = data.get('gamma') if isinstance(data, dict) else data
        gamma = _np.array(values, dtype='float64').ravel()
    except ScenarioParseError:
        raise
    except (IOError, OSError) as error:
        raise ScenarioParseError("cannot read {0}: {1}".format(file_name, error))
    except (ValueError, TypeError, StopIteration) as error:
        raise ScenarioParseError("no thresholds in {0}: {1}".format(file_name, error), 'gamma')
    return gamma
