"""Smoke test for the compiled extension: build it with
`maturin develop -m crates/python/Cargo.toml` and run this file."""

import json

import veronese


def main():
    v = veronese.Veronese.parse("5;3,2,1")
    assert v.caps == [3, 2, 1] and v.d == 5
    assert v.generators() == [[3, 2, 0], [3, 1, 1], [2, 2, 1]]
    assert v.radical() == [[1, 2]]

    primes = dict((tuple(a), z) for a, z in v.associated_primes())
    assert set(primes) == {(1,), (2,), (1, 2), (1, 3), (2, 3)}
    assert primes[(1,)] == [1, 2, 1]
    assert v.is_equidimensional() and not v.is_unmixed()
    assert v.classify() == "NotCohenMacaulay"

    report = json.loads(v.analyze(oracle=True))
    assert report["schema"] == 1
    assert report["oracle"]["agreed"]

    w = veronese.Veronese(7, [4, 3, 2, 1, 1])
    assert w.mb() == (5, 4)
    assert not w.is_equidimensional()
    assert veronese.borel_generators(5, w.radical()) == [[1, 2], [1, 3, 5], [2, 3, 4, 5]]

    b = veronese.BaseSet([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
    assert b.check_strong_exchange() and b.rank == 4
    offset, translated = b.translation_normalize()
    assert offset == [1, 1, 1] and translated == veronese.Veronese(1, [1, 1, 1])
    assert b.radical_via_rank() == [[1, 2, 3]]

    assert veronese.minimal_vertex_covers(2, [[1, 1]]) == [[1], [2]]
    assert [a for a, _ in veronese.associated_primes_bruteforce(2, [[2, 0], [1, 1], [0, 2]])] == [[1, 2]]

    try:
        veronese.Veronese.parse("3;1,1")
    except veronese.VeroneseError as e:
        assert "zero ideal" in str(e)
    else:
        raise AssertionError("infeasible parameters accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
