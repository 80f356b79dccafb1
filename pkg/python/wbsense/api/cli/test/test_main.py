"""Tests of the command line front end."""
import io
import json
import os
import shutil
import tempfile
import unittest


class TestMain(unittest.TestCase):

    def setUp(self):
        from wbsense.api.scenarios import eight_bands_path

        self._dir = tempfile.mkdtemp()
        self._scenario = eight_bands_path()
        self._out = io.StringIO()

    def tearDown(self):
        shutil.rmtree(self._dir)

    def _path(self, name):
        return os.path.join(self._dir, name)

    def _main(self, *argv):
        from wbsense.api.cli import main
        return main(list(argv), out=self._out)

    def _write_scenario(self, name, change):
        with open(self._scenario) as f:
            data = json.load(f)
        change(data)
        with open(self._path(name), 'w') as f:
            json.dump(data, f)
        return self._path(name)

    def test_optimize(self):
        code = self._main('optimize', '--scenario', self._scenario, '--problem', 'p2',
                          '--out', self._path('p2.json'))
        self.assertEqual(code, 0)
        self.assertTrue(os.path.exists(self._path('p2.csv')))
        with open(self._path('p2.json')) as f:
            data = json.load(f)
        self.assertEqual(data['status'], 'optimal')
        self.assertEqual(len(data['gamma']), 8)
        self.assertIn('Status: optimal', self._out.getvalue())

    def test_optimize_floor_override(self):
        code = self._main('optimize', '--scenario', self._scenario, '--problem', 'p3',
                          '--delta', '3000', '--out', self._path('p3.json'))
        self.assertEqual(code, 0)
        with open(self._path('p3.json')) as f:
            self.assertAlmostEqual(json.load(f)['throughput'], 3000.0, delta=1E-5)

    def test_optimize_infeasible(self):
        code = self._main('optimize', '--scenario', self._scenario, '--epsilon', '0.5',
                          '--out', self._path('none.json'))
        self.assertEqual(code, 2)
        self.assertIn('Infeasible', self._out.getvalue())

    def test_validation_error(self):
        def change(data):
            data['subchannels']['alpha'][0] = 0.6

        scenario = self._write_scenario('bad_alpha.json', change)
        code = self._main('optimize', '--scenario', scenario, '--out', self._path('x.json'))
        self.assertEqual(code, 3)

    def test_parse_errors(self):
        broken = self._path('broken.json')
        with open(broken, 'w') as f:
            f.write('[1, 2')
        code = self._main('optimize', '--scenario', broken, '--out', self._path('x.json'))
        self.assertEqual(code, 4)
        code = self._main('optimize', '--scenario', self._path('missing.json'),
                          '--out', self._path('x.json'))
        self.assertEqual(code, 4)

    def test_usage_errors(self):
        self.assertEqual(self._main('optimize', '--problem', 'p4'), 4)
        self.assertEqual(self._main('tune'), 4)
        self.assertEqual(self._main(), 4)

    def test_sweep(self):
        code = self._main('sweep', '--scenario', self._scenario, '--param', 'epsilon',
                          '--from', '0.8', '--to', '1.6', '--steps', '3',
                          '--out', self._path('sweep.csv'))
        self.assertEqual(code, 0)
        with open(self._path('sweep.csv')) as f:
            lines = f.read().splitlines()
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[0].startswith('sweep_value,objective_joint,objective_uniform'))
        self.assertTrue(lines[1].endswith('infeasible'))
        self.assertTrue(os.path.exists(self._path('sweep.dat')))

    def test_sweep_without_feasible_point(self):
        code = self._main('sweep', '--scenario', self._scenario, '--param', 'epsilon',
                          '--from', '0.1', '--to', '0.9', '--steps', '5',
                          '--out', self._path('sweep.csv'))
        self.assertEqual(code, 3)
        self.assertFalse(os.path.exists(self._path('sweep.csv')))

    def test_sweep_empty_range(self):
        code = self._main('sweep', '--scenario', self._scenario, '--param', 'delta',
                          '--from', '2000', '--to', '2000', '--out', self._path('sweep.csv'))
        self.assertEqual(code, 3)
        code = self._main('sweep', '--scenario', self._scenario, '--param', 'delta',
                          '--steps', '0', '--out', self._path('sweep.csv'))
        self.assertEqual(code, 3)

    def test_validate_threshold_file(self):
        self._main('optimize', '--scenario', self._scenario, '--out', self._path('p1.json'))
        code = self._main('validate', '--scenario', self._scenario, '--trials', '2000',
                          '--seed', '11', '--gamma-file', self._path('p1.json'),
                          '--out', self._path('validation.csv'))
        self.assertEqual(code, 0)
        with open(self._path('validation.csv')) as f:
            lines = f.read().splitlines()
        self.assertEqual(len(lines), 1 + 16)
        self.assertIn('Seed: 11', self._out.getvalue())
        self.assertNotIn('\033[31m', self._out.getvalue())

    def test_validate_wrong_threshold_count(self):
        gamma_file = self._path('gamma.json')
        with open(gamma_file, 'w') as f:
            json.dump([101.0, 102.0], f)
        code = self._main('validate', '--scenario', self._scenario, '--trials', '100',
                          '--gamma-file', gamma_file)
        self.assertEqual(code, 3)

    def test_validate_infeasible(self):
        def change(data):
            data['groups'][0]['epsilon'] = 0.5

        scenario = self._write_scenario('tight.json', change)
        code = self._main('validate', '--scenario', scenario, '--trials', '100')
        self.assertEqual(code, 2)

    def test_simulate_deterministic(self):
        contents = []
        for name in ['first.csv', 'second.csv']:
            code = self._main('simulate', '--scenario', self._scenario, '--trials', '300',
                              '--seed', '3', '--occupancy', '10100101',
                              '--out', self._path(name))
            self.assertEqual(code, 0)
            with open(self._path(name)) as f:
                contents.append(f.read())
        self.assertEqual(contents[0], contents[1])
        lines = contents[0].splitlines()
        self.assertEqual(lines[0].split(','), ['trial'] + ['energy_{0}'.format(k)
                                                           for k in range(8)])
        self.assertEqual(len(lines), 301)

    def test_simulate_bad_occupancy(self):
        code = self._main('simulate', '--scenario', self._scenario, '--occupancy', '101',
                          '--out', self._path('energies.csv'))
        self.assertEqual(code, 3)
        code = self._main('simulate', '--scenario', self._scenario, '--trials', '0',
                          '--out', self._path('energies.csv'))
        self.assertEqual(code, 3)


if __name__ == "__main__":
    from unittest import main
    main()
