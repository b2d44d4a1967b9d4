"""Word-level bit kernels for Slater determinant manipulation.

A determinant over at most 64 orbitals is stored in a single unsigned word:
bit i (counting from the LSB) is set iff orbital i+1 is occupied.  All
functions here are pure and operate on plain Python integers restricted to
64 bits.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import DomainError

WORD_BITS = 64
WORD_MASK = (1 << WORD_BITS) - 1


def popcount(x: int) -> int:
    return x.bit_count()


def last_bit(x: int) -> int:
    """Isolate the least significant 1-bit of x (x & -x in two's complement)."""
    if x == 0:
        raise DomainError("last_bit: argument must be nonzero")
    return x & -x


def next_fermi(s: int) -> int:
    """Next-larger integer with the same number of set bits.

    The leading bit of the least significant block of 1s moves up by one
    position and the remaining bits of the block drop to the bottom.
    """
    if s == 0:
        raise DomainError("next_fermi: argument must be nonzero")
    t = (s | (s - 1)) + 1
    # (last_bit(t) - 1) / last_bit(s) >> 1, with the division done as a shift
    return t | ((last_bit(t) - 1) >> last_bit(s).bit_length())


def next_fermi_config(s: int, orbs: Sequence[int]) -> Optional[int]:
    """Successor of s in the orbital-group constrained enumeration.

    Orbital group sizes are given by `orbs`, group 1 occupying the least
    significant bits and iterating fastest.  Returns None when s is the
    last admissible pattern.
    """
    assert s >= 0 and (s >> sum(orbs)) == 0, "pattern exceeds orbital count"
    mask = (1 << orbs[0]) - 1
    if ((s | (s - 1)) & mask) != mask:
        # group 1 not yet at its last local pattern
        return next_fermi(s)
    if len(orbs) == 1:
        return None
    t = next_fermi_config(s >> orbs[0], orbs[1:])
    if t is None:
        return None
    # reset group 1 to its first pattern, advance the remaining groups
    return (mask >> (last_bit(s).bit_length() - 1)) | (t << orbs[0])


def annihil_sign_mask(s: int) -> int:
    """Cumulative occupation parity mask of s.

    Bit i of the result is the parity of the number of set bits of s at
    positions 0..i; bits above the top set bit (up to the word width)
    follow the same rule.  Runs in O(popcount(s)).
    """
    m = 0
    while s:
        t = s & -s
        m ^= (-t) & WORD_MASK
        s -= t
    return m


def rev_sign(n: int) -> int:
    """Sign of the order-reversing permutation on n elements, (-1)^(n(n-1)/2)."""
    if n < 0:
        raise DomainError("rev_sign: n must be non-negative")
    return 1 if n % 4 in (0, 1) else -1


def bit_distribute(t: int, mask: int) -> int:
    """Deposit the low bits of t into the positions of the set bits of mask.

    Bit i of t lands at the position of the i-th 1-bit of mask (a parallel
    bit deposit).  All set bits of t must lie below popcount(mask).
    """
    if t >> popcount(mask):
        raise DomainError("bit_distribute: t has bits beyond popcount(mask)")
    res = 0
    m = mask
    while t:
        low = m & -m
        if t & 1:
            res |= low
        m -= low
        t >>= 1
    return res


def fermi_to_coords(s: int) -> list[int]:
    """Occupied orbital indices (1-based, strictly increasing) of a determinant."""
    coords = []
    i = 1
    while s:
        if s & 1:
            coords.append(i)
        s >>= 1
        i += 1
    return coords


def coords_to_fermi(coords: Sequence[int]) -> int:
    """Inverse of fermi_to_coords; indices are 1-based and must be distinct."""
    s = 0
    for i in coords:
        if i < 1 or i > WORD_BITS:
            raise DomainError(f"orbital index {i} out of range 1..{WORD_BITS}")
        b = 1 << (i - 1)
        if s & b:
            raise DomainError(f"orbital index {i} repeated")
        s |= b
    return s


def boson_encode(occupations: Sequence[int]) -> int:
    """Bit-encode bosonic mode occupations, 0-bits delimiting the modes.

    Mode j contributes occupations[j] consecutive 1-bits followed by a
    single 0-bit delimiter (none after the last mode); mode 1 sits at the
    LSB.  m modes with N particles occupy m + N - 1 bits.
    """
    m = len(occupations)
    if m < 1:
        raise DomainError("boson_encode: need at least one mode")
    if any(n < 0 for n in occupations):
        raise DomainError("boson_encode: occupations must be non-negative")
    width = sum(occupations) + m - 1
    if width > WORD_BITS:
        raise DomainError(f"boson_encode: width {width} exceeds {WORD_BITS} bits")
    b = 0
    pos = 0
    for n in occupations:
        b |= ((1 << n) - 1) << pos
        pos += n + 1
    return b


def boson_decode(b: int, modes: int) -> list[int]:
    """Invert boson_encode for a state of the given number of modes."""
    if modes < 1:
        raise DomainError("boson_decode: need at least one mode")
    width = popcount(b) + modes - 1
    if width > WORD_BITS:
        raise DomainError(f"boson_decode: width {width} exceeds {WORD_BITS} bits")
    if b >> width:
        raise DomainError("boson_decode: set bits beyond the encoding width")
    occ = []
    count = 0
    for pos in range(width):
        if (b >> pos) & 1:
            count += 1
        else:
            occ.append(count)
            count = 0
    occ.append(count)
    return occ
