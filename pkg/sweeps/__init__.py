"""Property sweeps over lens parameters and random words"""
