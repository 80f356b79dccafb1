""" Multiband joint detection for wideband spectrum sensing """
