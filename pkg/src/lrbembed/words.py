"""Words of the free left regular band.

A word is a tuple of pairwise distinct letters.  A letter is either a base
generator, represented by a positive ``int`` k (printed ``a<k>``), or a
:class:`Fresh` letter minted by the Modification step.  Letters are ranked by
:func:`letter_key`: base letters first by index, then fresh letters in
creation order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable, Hashable, Iterable, Mapping, Sequence, Union

Word = tuple


@dataclass(frozen=True)
class Fresh:
    owner: int
    tag: int | None  # None marks the "empty" letter t_c^{}
    round: int


Letter = Union[int, Fresh]


def letter_key(a: Letter) -> tuple:
    if isinstance(a, Fresh):
        return (1, a.round, -1 if a.tag is None else a.tag)
    return (0, a)


def fw_product(w1: Word, w2: Word) -> Word:
    """Concatenate, dropping letters of ``w2`` already present."""
    seen = set(w1)
    return tuple(w1) + tuple(a for a in w2 if a not in seen)


def product_of(words: Iterable[Word]) -> Word:
    return reduce(fw_product, words, ())


def normalize(letters: Iterable[Letter]) -> Word:
    """Keep the first occurrence of every letter."""
    return tuple(dict.fromkeys(letters))


def fw_leq(w1: Word, w2: Word) -> bool:
    return tuple(w2[: len(w1)]) == tuple(w1)


def fw_preceq(w1: Word, w2: Word) -> bool:
    return set(w1) <= set(w2)


def canonical_key(w: Word, key: Callable[[Letter], Hashable] = letter_key) -> tuple:
    ks = [key(a) for a in w]
    return (len(ks), tuple(sorted(ks)), tuple(ks))


def canonical_compare(w1: Word, w2: Word, key: Callable[[Letter], Hashable] = letter_key) -> int:
    """-1, 0 or 1: size first, then sorted letter ranks, then the sequence."""
    k1, k2 = canonical_key(w1, key), canonical_key(w2, key)
    return (k1 > k2) - (k1 < k2)


def arrow(letters: Iterable, letter_of: Mapping | Callable | None = None) -> Word:
    """Map semilattice letters to generators and sort them by rank."""
    if letter_of is None:
        images = list(letters)
    elif callable(letter_of):
        images = [letter_of(a) for a in letters]
    else:
        images = [letter_of[a] for a in letters]
    if len(set(images)) != len(images):
        raise ValueError("letter map is not injective on the given letters")
    return tuple(sorted(images, key=letter_key))


def delta_word(x: Word, parent: Word) -> Word:
    """The suffix of ``x`` following its prefix ``parent``."""
    if not fw_leq(parent, x):
        raise ValueError(f"{parent} is not a prefix of {x}")
    return tuple(x[len(parent):])


def separator(dx: Word, dy: Word, b: Word) -> Letter | None:
    """The (x,y)-separator in ``b``, or None when x does not precede y.

    That is the last letter a of ``b`` in dy minus dx such that no letter of
    dx minus dy occurs after a in ``b``.
    """
    sx, sy = set(dx), set(dy)
    if sx == sy:
        raise ValueError("separator needs distinct letter sets")
    if not (sx | sy) <= set(b):
        raise ValueError("letters of dx, dy must occur in b")
    only_x, only_y = sx - sy, sy - sx
    found = None
    for i, a in enumerate(b):
        if a in only_y and not any(c in only_x for c in b[i + 1:]):
            found = a
    return found


class ClosureTooLarge(RuntimeError):
    pass


def word_name(w: Word) -> str:
    if not w:
        return "e"
    return "".join(f"a{a}" if isinstance(a, int) else f"[{letter_name(a)}]" for a in w)


def letter_name(a: Letter, labels: Sequence[str] | None = None) -> str:
    if isinstance(a, Fresh):
        owner = labels[a.owner] if labels else str(a.owner)
        tag = "EMPTY" if a.tag is None else (labels[a.tag] if labels else str(a.tag))
        return f"t:{owner}:{tag}:{a.round}"
    return f"a{a}"


def parse_letter(name: str, labels: Sequence[str] | None = None) -> Letter:
    if name.startswith("t:"):
        parts = name.split(":")
        if len(parts) != 4:
            raise ValueError(f"malformed fresh letter {name!r}")
        _, owner, tag, rnd = parts
        look = (lambda s: labels.index(s)) if labels else int
        return Fresh(look(owner), None if tag == "EMPTY" else look(tag), int(rnd))
    if name.startswith("a") and name[1:].isdigit():
        return int(name[1:])
    raise ValueError(f"malformed letter {name!r}")


def format_word(w: Word, labels: Sequence[str] | None = None) -> str:
    return " ".join(letter_name(a, labels) for a in w)


def parse_word(text: str, labels: Sequence[str] | None = None) -> Word:
    w = tuple(parse_letter(tok, labels) for tok in text.split())
    if len(set(w)) != len(w):
        raise ValueError(f"repeated letter in word {text!r}")
    return w


def close_under_product(seeds: Iterable[Word], adjoin_identity: bool = True, cap: int = 512):
    """Smallest set of words containing ``seeds`` and closed under product.

    Returns ``(band, words)`` where ``words[i]`` is the word of element i.
    Elements are ordered by :func:`canonical_key`, so the empty word (when
    present) is element 0.
    """
    from .band import Band

    found = {tuple(s) for s in seeds}
    if not found:
        raise ValueError("no seeds")
    if adjoin_identity:
        found.add(())
    frontier = list(found)
    while frontier:
        new = []
        for u in frontier:
            for v in list(found):
                for p in (fw_product(u, v), fw_product(v, u)):
                    if p not in found:
                        found.add(p)
                        new.append(p)
                        if len(found) > cap:
                            raise ClosureTooLarge(f"closure exceeds {cap} elements")
        frontier = new
    if () not in found:
        raise ValueError("closure has no identity; pass adjoin_identity=True")
    words = sorted(found, key=canonical_key)
    index = {w: i for i, w in enumerate(words)}
    table = tuple(tuple(index[fw_product(u, v)] for v in words) for u in words)
    band = Band(table, index[()], tuple(word_name(w) for w in words))
    return band, words
