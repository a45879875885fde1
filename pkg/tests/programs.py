"""Hand-built core programs used across the test modules."""

from mltt.syntax import App, Lam, Nat, NatElim, Pi, Succ, Univ, Var, Zero, numeral

# add m n = natrec(_. Nat, m, \k ih. succ ih, n)
ADD = Lam(Nat(), Lam(Nat(), NatElim(Nat(), Var(1), Lam(Nat(), Lam(Nat(), Succ(Var(0)))), Var(0))))

# mul m n = natrec(_. Nat, 0, \k ih. add ih m, n)
MUL = Lam(Nat(), Lam(Nat(), NatElim(
    Nat(), Zero(), Lam(Nat(), Lam(Nat(), App(App(ADD, Var(0)), Var(3)))), Var(0))))

# natToType n = natrec(_. Type, Nat, \k T. Nat -> T, n)
NAT_TO_TYPE = Lam(Nat(), NatElim(Univ(), Nat(), Lam(Nat(), Lam(Univ(), Pi(Nat(), Var(1)))), Var(0)))

ID_NAT = Lam(Nat(), Var(0))


def add(m, n):
    return App(App(ADD, _num(m)), _num(n))


def mul(m, n):
    return App(App(MUL, _num(m)), _num(n))


def _num(x):
    return numeral(x) if isinstance(x, int) else x
