"""The verification checks, their witnesses, and their negative controls."""

import random

from wh3 import catalog, ncalg, verify
from wh3.catalog import CMatrix, PAIRS
from wh3.exprs import parse_element, parse_scalar
from wh3.linalg import ScalarEchelon
from wh3.ncalg import Element, MembershipOracle
from wh3.reports import reports_to_json
from wh3.scalars import Scalar
from wh3.verify import VerifyContext


def detail_map(report):
    return {d.id: d for d in report.details}


# ---------------------------------------------------------------------------
# positive suite (shared run)
# ---------------------------------------------------------------------------


def test_all_default_checks_pass(default_reports):
    assert set(default_reports) == set(verify.CHECK_IDS)
    for check, report in default_reports.items():
        assert report.passed, (check, report.counterexample)


def test_modular_verdicts_record_prime_and_seed(default_reports):
    det = default_reports["determinant"]
    assert det.status in ("pass", "pass-modular")
    assert det.prime is not None
    assert det.seed is not None


def test_rtt_reports_rank(default_reports):
    details = detail_map(default_reports["rtt"])
    assert "rank 36" in details["rank"].note or "36" in details["rank"].note
    assert details["independent-rows"].ok


def test_inverse_has_all_eighteen_certificates(default_reports):
    details = detail_map(default_reports["inverse"])
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            assert details[f"right-inverse:({i},{j})"].ok
            assert details[f"antipode:({i},{j})"].ok
            assert not details[f"right-inverse:({i},{j})"].modular


def test_determinant_lambda_notes(default_reports):
    details = detail_map(default_reports["determinant"])
    assert "q^4/u^2" in details["lambda:t12"].note
    assert "u^2/q^4" in details["lambda:t21"].note
    assert details["non-centrality:t21"].ok
    assert details["exact-modular-agreement:t11"].ok
    assert details["exact-modular-agreement:t21"].ok


def test_coaction_covers_required_families(default_reports):
    details = detail_map(default_reports["coaction"])
    for fid in ("xx", "xixi", "dd", "xxi-omega", "dxi-omega", "xd-omega"):
        assert details[f"family:{fid}"].ok, fid
    assert details["transposed-inverse"].ok


def test_star_details(default_reports):
    details = detail_map(default_reports["star"])
    assert details["involutive-on-generators"].ok
    assert details["variable-relation-fixed-point"].ok
    assert details["determinant-star-fixed"].ok


def test_reports_depend_only_on_seed(default_reports):
    ctx = VerifyContext(seed=99)
    a = verify.run_check("determinant", ctx)
    b = verify.run_check("determinant", ctx)
    a.millis = b.millis = 0
    assert reports_to_json([a]) == reports_to_json([b])


def test_rtt_implies_coaction_ordering(default_reports):
    # logical dependency: the coaction can only hold on top of a correct
    # quantum matrix; both are executed independently and both pass
    assert default_reports["rtt"].passed
    assert default_reports["coaction"].passed


# ---------------------------------------------------------------------------
# negative controls
# ---------------------------------------------------------------------------


def test_ybe_mutation_fails_with_cited_cell():
    ctx = VerifyContext(omega_mutations=(((1, 1), (1, 1), Scalar.one()),))
    report = verify.check_yang_baxter(ctx)
    assert report.status == "fail"
    assert report.counterexample and "cell" in report.counterexample


def test_ybe_identity_braiding_passes():
    # braid equation for the identity is trivial; exercised via the raw helper
    ident = CMatrix.identity()
    C1 = verify._matrix_27(ident, True)
    C2 = verify._matrix_27(ident, False)
    assert verify._mul_27(verify._mul_27(C1, C2), C1) == \
        verify._mul_27(verify._mul_27(C2, C1), C2)


def test_constraints_fail_for_identity_braiding():
    ident = CMatrix.identity()
    # first linear identity: C^{12}_{12} = q C^{21}_{12} - 1 becomes 1 = -1
    lhs = ident.entry((1, 2), (1, 2))
    rhs = Scalar.param("q") * ident.entry((2, 1), (1, 2)) - Scalar.one()
    assert lhs != rhs
    assert lhs == Scalar.one() and rhs == Scalar.from_fraction(-1)


def test_rtt_mutation_zeroed_entry_fails():
    ctx = VerifyContext(omega_mutations=(((1, 2), (3, 3), Scalar.zero()),))
    report = verify.check_rtt(ctx)
    assert report.status == "fail"
    assert report.counterexample  # separating vector cited


def test_calculus_mutation_fails_derivative_annihilation():
    # corrupt one structure coefficient: d2*x1 -> (q/u^2)*x1*d2 instead of q^2/u^2
    pres = catalog.calculus_presentation("omega")
    target = pres.alphabet
    mutated = []
    for rel in pres.relations:
        text = rel.format()
        if text.startswith("-(q^2/u^2)*x1*d2"):
            rel = parse_element("d2*x1 - (q/u^2)*x1*d2", target)
        mutated.append(rel)
    assert any(r.format() == "-(q/u^2)*x1*d2 + d2*x1" for r in mutated)
    rules = ncalg.orient(ncalg.PresentationSpec("mutated", target, mutated))
    first = catalog.embed_element(catalog.family("xx").relations[0], target)
    residual = rules.normalize(Element.generator(target, "d2") * first)
    assert not residual.is_zero


def test_coaction_negative_control_dropped_relations():
    """Treating the lower corner generators as free breaks invariance."""
    tt = catalog.tt_presentation()
    dropped = {8, 9}  # the straightening rows for t31*t11 and t32*t11
    weakened = ncalg.PresentationSpec(
        "weakened", tt.alphabet,
        [r for idx, r in enumerate(tt.relations) if idx not in dropped],
    )
    xp = catalog.x_presentation()
    tensor = ncalg.algebra_tensor(weakened, xp)
    rules = ncalg.orient(tensor)
    TA = tensor.alphabet
    images = {}
    for i in (1, 2, 3):
        total = Element.zero(TA)
        for j in (1, 2, 3):
            total = total + Element.generator(TA, f"t{i}{j}") * Element.generator(TA, f"x{j}")
        images[f"x{i}"] = total
    rel = catalog.family("xx").relations[1]  # x1*x3 - u*x3*x1
    image = Element.zero(TA)
    for w, c in rel.terms.items():
        piece = Element.from_scalar(TA, c)
        for g in w:
            piece = piece * images[rel.alphabet.generators[g].name]
        image = image + piece
    residual = rules.normalize(image)
    assert not residual.is_zero
    # certify non-membership with the tensor-quotient oracle: project each
    # t-coefficient modulo the weakened span and the x-part modulo the
    # variable relations; a nonzero image cannot lie in the combined ideal
    ech_t = ScalarEchelon(tt.alphabet.word_key)
    for rel_t in weakened.relations:
        ech_t.insert(dict(rel_t.terms))
    assert ech_t.rank == 34
    ech_x = ScalarEchelon(xp.alphabet.word_key)
    for rel_x in xp.relations:
        ech_x.insert(dict(rel_x.terms))
    offset = len(tt.alphabet)
    matrix: dict = {}
    for w, c in residual.terms.items():
        t_word = tuple(g for g in w if g < offset)
        x_word = tuple(g - offset for g in w if g >= offset)
        matrix.setdefault(x_word, {})[t_word] = c
    quotient_nonzero = False
    for x_word, t_vec in matrix.items():
        reduced_t = ech_t.reduce(dict(t_vec))
        for t_word, c in reduced_t.items():
            reduced_x = ech_x.reduce({x_word: c})
            if reduced_x:
                quotient_nonzero = True
    assert quotient_nonzero  # image survives both quotients: not in the ideal


def test_full_coaction_passes_where_weakened_fails(default_reports):
    assert detail_map(default_reports["coaction"])["family:xx"].ok


# ---------------------------------------------------------------------------
# mutation sensitivity (>= 20 random single corruptions flip each verdict)
# ---------------------------------------------------------------------------


def test_ybe_mutation_sensitivity():
    rng = random.Random(20260809)
    for trial in range(20):
        mutation = verify.random_omega_mutation(rng)
        ctx = VerifyContext(omega_mutations=(mutation,))
        report = verify.check_yang_baxter(ctx)
        assert report.status == "fail", (trial, mutation)


def test_rtt_mutation_sensitivity():
    rng = random.Random(424242)
    gen = catalog.rtt_generate(catalog.omega()).relations
    ech = ScalarEchelon(catalog.t_alphabet().word_key)
    for rel in gen:
        if not rel.is_zero:
            ech.insert(dict(rel.terms))
    fam = catalog.family("tt").relations
    for trial in range(20):
        idx = rng.randrange(len(fam))
        rel = fam[idx]
        word = sorted(rel.terms)[rng.randrange(len(rel.terms))]
        bump = Scalar.param("q") if rng.random() < 0.5 else Scalar.from_fraction(1)
        mutated = rel + Element.from_word(rel.alphabet, word, bump)
        assert ech.reduce(dict(mutated.terms)), (trial, idx)


def test_calculus_mutation_sensitivity():
    rng = random.Random(777)
    target = catalog.calculus_alphabet()
    generated = {
        kind: catalog.generate_from_C(catalog.omega(), kind).relations
        for kind in ("xxi", "dxi", "xd")
    }
    echelons = {}
    for kind, rels in generated.items():
        ech = ScalarEchelon(target.word_key)
        for rel in rels:
            ech.insert(dict(rel.terms))
        echelons[kind] = ech
    for trial in range(20):
        kind, fid = rng.choice((("xxi", "xxi-omega"), ("dxi", "dxi-omega"), ("xd", "xd-omega")))
        fam = catalog.embed_relations(catalog.family(fid), target)
        rel = fam[rng.randrange(len(fam))]
        word = sorted(rel.terms)[rng.randrange(len(rel.terms))]
        mutated = rel + Element.from_word(target, word, Scalar.param("u"))
        assert echelons[kind].reduce(dict(mutated.terms)), (trial, kind)


# ---------------------------------------------------------------------------
# eigenstructure: derived oracle and specialization invariance
# ---------------------------------------------------------------------------


def test_xx_vector_is_row_eigenvector_by_direct_multiplication():
    # independent 9-component oracle for the first variable relation vector
    om = catalog.omega()
    vec = {
        (1, 2): Scalar.one(),
        (2, 1): -Scalar.param("q"),
        (3, 3): -Scalar.param("s"),
    }
    image = {}
    for rp, c in vec.items():
        for cp in PAIRS:
            v = om.entry(rp, cp)
            if not v.is_zero:
                image[cp] = image.get(cp, Scalar.zero()) + c * v
    image = {k: v for k, v in image.items() if not v.is_zero}
    assert image == {k: -v for k, v in vec.items()}


def test_one_form_vectors_have_eigenvalue_q_over_u_squared(default_reports):
    details = detail_map(default_reports["eigenstructure"])
    assert "q/u^2" in details["one-form-row-eigenvectors:omega"].note


def test_eigenstructure_surfaces_normalization_ambiguity(default_reports):
    # both spectra are reported; the stated one-form value is flagged, not patched
    details = detail_map(default_reports["eigenstructure"])
    note = details["spectrum-normalization-note"].note
    assert "-1" in note and "q/u^2" in note


def test_eigenstructure_invariant_under_numeric_specialization(default_reports):
    from fractions import Fraction

    ctx = VerifyContext(bindings=(
        ("q", Scalar.from_fraction(Fraction(7, 5))),
        ("u", Scalar.from_fraction(Fraction(3, 2))),
        ("s", Scalar.from_fraction(Fraction(2, 9))),
    ))
    numeric = verify.check_eigenstructure(ctx)
    assert numeric.passed
    sym = detail_map(default_reports["eigenstructure"])
    num = detail_map(numeric)
    for key in ("derivative-eigenspace-dim:omega", "derivative-eigenspace-dim:omega-inv"):
        assert sym[key].note == num[key].note  # same reported dimensions
    # the numeric eigenvalues are the specializations of the symbolic ones
    assert "-1" in num["xx-row-eigenvectors:omega"].note


def test_specialization_details(default_reports):
    details = detail_map(default_reports["specializations"])
    assert details["s=0-quantum-plane"].ok
    assert details["q=u^2-self-inverse-braiding"].ok
    assert details["t3-row-residue:t12*t33"].ok
    assert details["t3-row-residue:t21*t33"].ok
    assert details["t-prime-commutativity"].ok
    assert "nu" in details["t-prime-commutativity"].note


def test_membership_certifies_corrected_inverse_factor():
    """Degree-4 membership certifies the corrected commutation factor for t21
    and rejects the uncorrected printed one."""
    pres = catalog.tt_presentation()
    oracle = MembershipOracle(pres)
    A = pres.alphabet
    D = catalog.quantum_determinant()
    g = Element.generator(A, "t21")
    true_lambda = catalog.dinv_factor("t21").inverse()  # u^2/q^4
    assert true_lambda == parse_scalar("u^2/q^4")
    assert oracle.member(g * D - D.scale(true_lambda) * g, degree=4).member
    printed_lambda = parse_scalar("1/q^2")  # from the uncorrected row
    report = oracle.member(g * D - D.scale(printed_lambda) * g, degree=4)
    assert not report.member


def test_hopf_details(default_reports):
    details = detail_map(default_reports["hopf"])
    assert details["coproduct-is-algebra-map"].ok
    assert details["determinant-group-like"].ok
    assert details["counit-axiom"].ok


# ---------------------------------------------------------------------------
# errata-off: the documented, stable failing set
# ---------------------------------------------------------------------------

ERRATA_OFF_EXPECTED_FAILURES = {
    "eigenstructure": {"derivative-eigenvectors:omega", "derivative-eigenvectors:omega-inv"},
    "calculus-omega": {"generated-vs-transcribed:dxi"},
    "calculus-omega-inv": {
        "generated-vs-transcribed:xd",
        "derivative-annihilates:d1*xx1",
        "derivative-annihilates:d3*xx1",
        "derivative-decomposition:x2*x3*x1",
    },
    "rtt": {"generated-vs-transcribed"},
    "star": {
        "quantum-matrix-relations",
        "determinant-star-fixed",
        "inverse-determinant-relations",
    },
    "hopf": {"coproduct-is-algebra-map", "determinant-group-like"},
    "specializations": {"q=u^2-calculi-coincide:dxi", "q=u^2-calculi-coincide:xd"},
}


def test_errata_off_failing_set_is_stable(errata_off_reports):
    passing = {c for c, r in errata_off_reports.items() if r.passed}
    assert passing == {"ybe", "constraints"}
    for check, expected in ERRATA_OFF_EXPECTED_FAILURES.items():
        failed = {d.id for d in errata_off_reports[check].details if not d.ok}
        assert failed == expected, (check, failed)
    # the remaining failures localize in the inverse/determinant/coaction web
    for check in ("inverse", "determinant", "coaction"):
        assert not errata_off_reports[check].passed


def test_errata_off_star_cites_flawed_rows(errata_off_reports):
    report = errata_off_reports["star"]
    assert "[9, 25, 27, 33]" in (report.counterexample or "")
