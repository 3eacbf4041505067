import random
from fractions import Fraction


def rand_fraction(rng: random.Random, max_den: int, max_num: int = 12) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def rand_lambda_values(rng: random.Random, ell: int, max_den: int, max_num: int = 12):
    return tuple(rand_fraction(rng, max_den, max_num) for _ in range(ell))
