"""
algebra - exact arithmetic, p-adic lifting and Z[[x]] factorization
"""
