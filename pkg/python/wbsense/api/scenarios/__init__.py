__all__ = ['eight_bands', 'eight_bands_path', 'identical_subchannels', 'random_spec']

from .scenarios import eight_bands, eight_bands_path, identical_subchannels, random_spec
