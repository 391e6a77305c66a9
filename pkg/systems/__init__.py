"""
systems - Services transverses : configuration et logs
"""
