"""The trace characteristic map, computed two ways and compared.

Uses the action pairing phi(h, a) = h.a between C = kZ/2 (regular module
coalgebra) and A = k[x]/(x^2), lifts each Hopf-cyclic cocycle through the
morphism alpha, and pairs it with the unique invariant trace on A.
"""

from hopfcyclic import (QQ, alpha, invariant_traces, cyclic_cocycles,
                        cup_with_trace, cm_char_map, modular_pair_module)
from hopfcyclic import fixtures as fx


def main():
    h = fx.group_algebra(QQ, 2)
    mc = fx.regular_module_coalgebra(h)
    ma = fx.dual_numbers_module_algebra(h)
    pairing = fx.action_pairing(mc, ma)
    m = modular_pair_module(h, fx.trivial_modular_pair(h))

    am = alpha(pairing, m, 3)
    print("alpha built; commutation failures:", am.verify() or "none")

    y = am.target.meta["y"]
    traces = invariant_traces(y)
    print("invariant traces on C_*(A, k): %d" % len(traces))
    trace = traces[0]
    print("  t_0 =", trace.t0)

    x = am.target.meta["x"]
    for p in range(3):
        classes = cyclic_cocycles(x, p)
        print("degree %d: %d Hopf-cyclic cocycles" % (p, len(classes)))
        for i, cls in enumerate(classes):
            gamma = cm_char_map(trace, pairing, cls, alpha_mor=am)
            cup = cup_with_trace(cls, trace, am)
            print("  class %d -> gamma rep %s  (cup route agrees: %s)"
                  % (i, gamma.representative or "0", gamma == cup))


if __name__ == "__main__":
    main()
