import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mltt import contracts
from mltt.checker import check, check_ctx, infer, infer_red, wf_ty
from mltt.errors import ContractViolation, Fuel, OutOfFuel, TypeCheckError
from mltt.reduction import whnf
from mltt.syntax import (
    App, Empty, EmptyElim, Fst, Id, IdElim, Lam, Nat, NatElim, Pair, Pi, Refl,
    Sigma, Snd, Succ, Univ, Var, Zero, arrow, numeral,
)
from programs import MUL, NAT_TO_TYPE, add
from termgen import TermGen

TYPE_ID = App(Lam(Univ(), Var(0)), Nat())  # a β-redex that computes to Nat


def test_check_ctx_examples():
    check_ctx([])
    check_ctx([Nat(), Id(Nat(), Var(0), Var(0))])
    with pytest.raises(TypeCheckError):
        check_ctx([Zero()])


def test_wf_ty_examples():
    wf_ty([], Univ())
    wf_ty([], Pi(Nat(), Univ()))
    with pytest.raises(TypeCheckError):
        wf_ty([], Succ(Zero()))


def test_infer_examples():
    assert infer([], Lam(Nat(), Var(0))) == Pi(Nat(), Nat())
    assert infer([], App(Lam(Nat(), Var(0)), Zero())) == Nat()
    assert infer([Nat()], Var(0)) == Nat()
    with pytest.raises(TypeCheckError):
        infer([], Univ())


def test_infer_natrec_instantiates_motive():
    step = Lam(Nat(), Lam(Nat(), Succ(Var(0))))
    assert infer([], NatElim(Nat(), Zero(), step, numeral(2))) == Nat()
    # a dependent motive is instantiated at the scrutinee
    motive = Id(Nat(), Var(0), Var(0))
    step = Lam(Nat(), Lam(Id(Nat(), Var(0), Var(0)), Refl(Nat(), Succ(Var(1)))))
    t = NatElim(motive, Refl(Nat(), Zero()), step, numeral(2))
    assert infer([], t) == Id(Nat(), numeral(2), numeral(2))


def test_infer_red_examples():
    assert infer_red([], Lam(Nat(), Var(0))) == Pi(Nat(), Nat())
    assert infer_red([Pi(Nat(), Nat())], Var(0)) == Pi(Nat(), Nat())
    assert infer([TYPE_ID], Var(0)) == TYPE_ID
    assert infer_red([TYPE_ID], Var(0)) == Nat()


def test_check_examples():
    check([], Lam(Nat(), Var(0)), Pi(Nat(), Nat()))
    check([], Zero(), TYPE_ID)
    with pytest.raises(TypeCheckError) as err:
        check([], Zero(), Pi(Nat(), Nat()))
    assert "Nat vs Pi" in err.value.message


def test_pairs_and_projections():
    sig = Sigma(Nat(), Id(Nat(), Var(0), Var(0)))
    p = Pair(Nat(), Id(Nat(), Var(0), Var(0)), numeral(1), Refl(Nat(), numeral(1)))
    assert infer([], p) == sig
    assert infer([sig], Fst(Var(0))) == Nat()
    assert infer([sig], Snd(Var(0))) == Id(Nat(), Fst(Var(0)), Fst(Var(0)))


def test_symmetry_by_identity_elimination():
    # sym : (x y : Nat) -> Id Nat x y -> Id Nat y x
    motive = Id(Nat(), Var(1), Var(4))  # in x, y, p, y', e: Id Nat y' x
    body = IdElim(Nat(), Var(2), motive, Refl(Nat(), Var(2)), Var(1), Var(0))
    sym = Lam(Nat(), Lam(Nat(), Lam(Id(Nat(), Var(1), Var(0)), body)))
    expected = Pi(Nat(), Pi(Nat(), Pi(Id(Nat(), Var(1), Var(0)), Id(Nat(), Var(1), Var(2)))))
    check([], sym, expected)


def test_large_elimination():
    check([], NAT_TO_TYPE, arrow(Nat(), Univ()))
    two = App(NAT_TO_TYPE, numeral(2))
    wf_ty([], two)
    inhabitant = Lam(Nat(), Lam(Nat(), Zero()))
    check([], inhabitant, two)
    with pytest.raises(TypeCheckError):
        check([], Zero(), two)


def test_exfalso():
    check([Empty()], EmptyElim(Nat(), Var(0)), Nat())
    check([], Lam(Empty(), EmptyElim(Id(Nat(), Zero(), numeral(1)), Var(0))),
          Pi(Empty(), Id(Nat(), Zero(), numeral(1))))


def test_universe_only_contains_small_types():
    check([], Pi(Nat(), Nat()), Univ())
    with pytest.raises(TypeCheckError):
        check([], Pi(Nat(), Univ()), Univ())
    with pytest.raises(TypeCheckError):
        check([], Pi(Univ(), Var(0)), Univ())


def test_application_of_non_function_reports_path():
    with pytest.raises(TypeCheckError) as err:
        infer([], App(Zero(), Zero()))
    assert err.value.path == [0]
    assert err.value.message.startswith("expected a function")


def test_nested_error_path():
    # the bad argument sits at Lam.body -> App.arg
    t = Lam(Nat(), App(Lam(Nat(), Var(0)), Lam(Nat(), Var(0))))
    with pytest.raises(TypeCheckError) as err:
        infer([], t)
    assert err.value.path == [1, 1]


def test_unbound_variable():
    with pytest.raises(TypeCheckError) as err:
        infer([Nat()], Var(3))
    assert err.value.reason == "unbound"


def test_ill_typed_redexes_are_type_errors_not_crashes():
    with pytest.raises(TypeCheckError):
        infer([], Fst(Zero()))
    with pytest.raises(TypeCheckError):
        wf_ty([], App(Zero(), Nat()))


def test_fuel_is_threaded_through_checking():
    with pytest.raises(OutOfFuel):
        check([], App(MUL, numeral(7)), Pi(Nat(), Nat()), fuel=10)
    check([], add(2, 2), Nat(), fuel=Fuel(10_000))


def test_debug_contracts_reject_bad_inputs():
    contracts.set_debug(True)
    try:
        with pytest.raises(ContractViolation):
            check([Zero()], Var(0), Nat())
        with pytest.raises(ContractViolation):
            check([], Zero(), Succ(Zero()))
        check([Nat()], Var(0), Nat())
    finally:
        contracts.set_debug(False)


def test_release_mode_trusts_inputs():
    # without the debug contracts a bad context is simply not inspected
    assert infer([Zero()], Zero()) == Nat()


# -- corpus invariants

def test_corpus_infers(corpus_defs):
    assert len(corpus_defs) > 50
    for _, name, body, ty in corpus_defs:
        inferred = infer([], body)
        wf_ty([], inferred)  # output discipline
        check([], body, inferred)  # check-infer coherence
        check([], body, ty)


def test_corpus_subject_reduction(corpus_defs):
    for _, name, body, ty in corpus_defs:
        check([], whnf(body), infer([], body))


# -- generated invariants

@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_generated_terms_infer_and_reduce(seed):
    g = TermGen(seed)
    ctx = g.context()
    ty = g.small_type(ctx, 2)
    try:
        t = g.term(ctx, ty)
    except LookupError:
        return
    inferred = infer(ctx, t)
    wf_ty(ctx, inferred)
    check(ctx, t, inferred)
    check(ctx, t, ty)
    check(ctx, whnf(t), inferred)
