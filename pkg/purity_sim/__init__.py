"""
purity_sim — classical simulator and verification suite for k-copy quantum purity amplification.
"""
__version__ = "1.0.0"
