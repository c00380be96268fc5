"""Smoke test for the python bindings against the CMake-built module."""
import _kupinv as kup


def main():
    axioms = kup.check_hopf("hn:2:1")
    assert axioms and all(axioms.values()), axioms

    assert kup.invariant("hn:2:0", "builtin:lens:5") == "25"
    assert kup.invariant("group:3", "builtin:s1xs2") == "3"
    assert kup.invariant("hn:2:0", "builtin:poincare") == "1"
    assert kup.invariant("hn:2:0", "builtin:lens:3", oracle=True) == "9"

    pair = kup.good_pair("hn:2:0")
    assert pair.startswith("goodpair"), pair
    assert kup.invariant("hn:2:0", "builtin:lens:2", pair=pair) == "4"

    report = kup.check_good_pair("hn:2:0", pair)
    assert report["all_pass"], report
    assert report["nu"] == "-1"
    assert report["gamma"] == 2

    diagram = kup.builtin_diagram("lens:4")
    assert kup.invariant("group:4", diagram) == "4"

    rand = kup.random_diagram(7, 2, 6)
    assert kup.invariant("group:3", rand) == kup.invariant(
        "group:3", rand, oracle=True
    )

    refused = False
    try:
        kup.good_pair("anomega:2:2:1")
    except RuntimeError:
        refused = True
    assert refused

    print("smoke ok")


if __name__ == "__main__":
    main()
