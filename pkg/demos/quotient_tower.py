"""Walk the equivariant quotient tower T -> Q -> C for H = kZ/2.

Builds the para-cocyclic cover of (C, M) = (H, k_(g,eps)), computes the
saturation ideal J, and shows that the cyclic symmetry only becomes a
genuine symmetry after dividing by J and taking coinvariants.
"""

from hopfcyclic import (QQ, Matrix, ModularPair, modular_pair_module,
                        check_axioms, cohomology_table)
from hopfcyclic.cyclic import (cover_coalgebra, compute_J, quotient_module,
                               coinvariants)
from hopfcyclic import fixtures as fx


def main():
    h = fx.group_algebra(QQ, 2)
    mc = fx.regular_module_coalgebra(h)
    m = modular_pair_module(h, ModularPair({1: QQ.one},
                                           {0: QQ.one, 1: QQ.one}))
    print("cover T_*(H, k_(g,eps)) for H = kZ/2")
    t = cover_coalgebra(mc, m, 5)
    print("  dims:", t.dims())
    twist = t.tau_power(1, 2)
    print("  tau_1^2 == id on T?",
          twist == Matrix.identity(QQ, t.spaces[1]))

    j = compute_J(t, buffer=2)
    print("saturation ideal J (buffer 2):",
          {n: j[n].dim for n in sorted(j)})
    q = quotient_module(t, j)
    print("quotient Q = T/J dims:", q.dims())
    print("  Q cyclic?", q.is_cyclic())

    c = coinvariants(q)
    print("coinvariants C = k (x)_H Q dims:", c.dims())
    print("  axiom violations:", check_axioms(c) or "none")
    print()
    table = cohomology_table(c, "mixed", 2)
    print(table.text())


if __name__ == "__main__":
    main()
