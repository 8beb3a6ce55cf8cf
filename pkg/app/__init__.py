# BohrNet - Bohrification and descent checks for lattice AQFT nets

__version__ = "0.1.0"
