"""Smoke test for the `tannaka` extension module.

Build and install first:  pip install --no-build-isolation ./crates/py
"""

import itertools
import json
import sys

import tannaka


def alternating_words(n):
    # Strings over two involutions with no letter repeated twice in a row.
    return sum(
        1
        for k in range(n + 1)
        for w in itertools.product("st", repeat=k)
        if all(a != b for a, b in zip(w, w[1:]))
    )


def main():
    for n in range(1, 4):
        assert tannaka.coherent_dim("c2-star-c2", n) == alternating_words(n), n
        assert tannaka.reduced_word_count("c2-star-c2", n) == alternating_words(n), n
    assert tannaka.coherent_dim("c2-amalg-c2", 3) == 2

    table = tannaka.hom_table([2, 3, 5])
    assert table == [[1, 0, 0], [0, 1, 0], [0, 0, 1]], table
    assert tannaka.hom_table([2, 3], field="7") == [[1, 0], [0, 1]]

    assert tannaka.pi1_free_rank("circle4", "a") == 1
    assert tannaka.pi1_free_rank("wedge7", "b") == 2

    report = json.loads(tannaka.scenario("6"))
    assert report["scenario"] == "c06-sl2-certificate"
    assert report["verdict"] == "pass", report
    assert len(tannaka.scenario_names()) == 10

    try:
        tannaka.coherent_dim("no-such-preset", 2)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown preset accepted")

    print("python smoke test: PASS")
    return 0


if __name__ == "__main__":
    sys.exit(main())
