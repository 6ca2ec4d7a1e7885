"""Smoke test for the python bindings: one pass over each exposed area."""

import sys

import dirconv as dc


def main() -> int:
    nstar = dc.Monoid("nstar")
    q = dc.Ring("Q")

    mu = dc.mobius(nstar, q, 1000)
    assert mu.at(1) == "1" and mu.at(2) == "-1" and mu.at(4) == "0" and mu.at(30) == "-1"
    one = dc.one(nstar, q, 1000)
    assert dc.convolve(mu, one) == dc.unit(nstar, q, 1000)
    assert dc.invert(one) == mu

    f = dc.Fn(nstar, q, 100)
    f.set(6, "5/3")
    assert dc.norm(f) == 6
    assert dc.norm(dc.Fn(nstar, q, 100)) is None
    g = dc.convolve(f, f)
    assert g.at(36) == "25/9"

    tau = dc.convolve(one, one)
    assert tau.at(12) == "6"

    twisted = dc.twist({p: str(p) for p in (2, 3, 5, 7)}, dc.one(dc.Monoid("gamma(4)"), q, 200))
    assert twisted.at(12) == "12"

    d = dc.lift_derivation({p: "1" for p in range(2, 257) if all(p % k for k in range(2, p))},
                           dc.one(nstar, q, 256))
    assert d.at(8) == "3"

    g2 = dc.Monoid("gamma(2)")
    half = dc.Fn(g2, q, 64)
    half.set(3, "1")
    e = dc.ExtFn(2, half)
    assert e.denominator() == 2
    assert e.at(3, 2) == "1" and e.at(2, 1) == "0"
    prod = dc.ext_convolve(e, e)
    assert prod.at(9, 4) == "1"
    two_thirds = dc.Fn(g2, q, 64)
    two_thirds.set(2, "1")
    assert dc.ext_convolve(e, dc.ExtFn(3, two_thirds)) == dc.ext_embed(dc.unit(g2, q, 64))
    assert dc.ext_add(e, e).at(3, 2) == "2"

    series, exact_bound = dc.encode(dc.one(g2, q, 144), [2, 2])
    assert exact_bound == 144
    assert series.coeff([1, 1]) == "1"
    back = dc.decode(series)
    assert back.at(12) == "1" and back.monoid() == g2

    c = dc.Ring("C")
    zeta_ish = dc.one(nstar, c, 2000)
    value, truncation = dc.eval_point(zeta_ish, 2 + 0j)
    assert truncation == 2000
    assert abs(value - 1.644934) < 1e-3

    results = dc.selftest()
    assert results and all(ok for _, ok in results), results

    text = dc.format_fn(mu)
    assert text.startswith("monoid=nstar ring=Q bound=1000")

    print("python smoke test: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
