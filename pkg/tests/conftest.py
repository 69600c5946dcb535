import random

from braidgeo.braids import BraidWord
from braidgeo.catalog import DATA_DIR


CHAIN_DIR = DATA_DIR / "chains"


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    letters = tuple(
        rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)
    )
    return BraidWord(strands, letters)


def rewrite_once(rng: random.Random, word: BraidWord) -> BraidWord:
    """One random element-preserving rewrite: splice a trivial relator or a
    cancelling pair into the word, or free-reduce it."""
    n = len(word.letters)
    pos = rng.randint(0, n)
    kind = rng.randrange(4)
    if kind == 0 and word.strands > 2:
        i = rng.randint(1, word.strands - 2)
        patch = (i, i + 1, i, -(i + 1), -i, -(i + 1))
    elif kind == 1 and word.strands > 3:
        i = rng.randint(1, word.strands - 3)
        j = rng.randint(i + 2, word.strands - 1)
        patch = (i, j, -i, -j)
    elif kind == 2:
        g = rng.choice((1, -1)) * rng.randint(1, word.strands - 1)
        patch = (g, -g)
    else:
        return word.free_reduced()
    return BraidWord(word.strands, word.letters[:pos] + patch + word.letters[pos:])


def random_rewrite(rng: random.Random, word: BraidWord, count: int) -> BraidWord:
    for _ in range(count):
        word = rewrite_once(rng, word)
    return word


def random_seifert_matrix(rng: random.Random, size: int):
    return tuple(
        tuple(rng.randint(-2, 2) for _ in range(size)) for _ in range(size)
    )
