"""Crossed products and external products over H = kZ/2.

Builds the crossed product coalgebra Z |x C from the function coalgebra
Z = k^(Z/2) and C = H, runs the characteristic morphism xi from its
cyclic module into the diagonal Hom complex, and evaluates cocycles at a
tau-invariant degree-0 element.  Finishes with the star morphism for the
commutative external product.
"""

from hopfcyclic import (QQ, xi, star, cyclic_cocycles,
                        crossed_cocup_with_invariant, modular_pair_module)
from hopfcyclic.hopf import crossed_product_coalgebra, check_coalgebra
from hopfcyclic import fixtures as fx


def main():
    h = fx.group_algebra(QQ, 2)
    zc = fx.function_comodule_coalgebra(h)
    mc = fx.regular_module_coalgebra(h)
    m = modular_pair_module(h, fx.trivial_modular_pair(h))

    prod = crossed_product_coalgebra(zc, mc)
    print("Z |x C coalgebra on %d basis vectors; defects: %s"
          % (prod.dim, check_coalgebra(prod) or "none"))

    xm = xi(zc, mc, m, 3)
    print("xi built; commutation failures:", xm.verify() or "none")

    g0 = {0: QQ.one}
    for p in range(3):
        classes = cyclic_cocycles(xm.source, p)
        print("degree %d: %d cyclic cocycles on Cyc(Z |x C)"
              % (p, len(classes)))
        for i, cls in enumerate(classes):
            out = crossed_cocup_with_invariant(cls, g0, xm)
            print("  class %d evaluated -> rep %s on C_%d(C, M)"
                  % (i, out.representative or "0", p))

    st = star(zc, zc, m, m, 2)
    print("star built; commutation failures:", st.verify() or "none")


if __name__ == "__main__":
    main()
