# PythParam - single-triple parametrization of Pythagorean triples
__version__ = "1.0.0"
