"""Command-line driver.

Subcommands:

  verify   run censuses and compare every enumerated quantity against its
           closed form, emitting a machine-readable report
  census   dump one family's class partition summary
  classes  list a family's isomorphism classes with their members
  fields   list the prime-power fields in range

Exit codes: 0 when every check passes, 1 on any mismatch, 2 on usage or
configuration errors.
"""

import argparse
import csv
import io
import json
import random
import sys
import time
from fractions import Fraction
from multiprocessing import Pool

from . import formulas
from .census import (
    GUARDS,
    baseline_short_weierstrass_census,
    census,
    projective_point_count,
    s_ij_census,
)
from .families import (
    FAMILY_NAMES,
    CurveDescriptor,
    difference_factorization_check,
    get_family,
    gh_rational_F,
    hessian_quartic_disc_check,
)
from .gf import field_of_order, is_prime_power, prime_powers

VERIFY_FAMILIES = FAMILY_NAMES + ("short-weierstrass",)
FORMATS = ("json", "csv", "text")

# the identity sweeps are quadratic in q, so the driver bounds them
IDENTITY_SWEEP_MAX_Q = 97
POINT_CHECK_EXHAUSTIVE_Q = 16
POINT_CHECK_SAMPLES = 24


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# verification of one (family, q) cell


def _add(checks, name, status, detail=""):
    checks.append({"name": name, "status": status, "detail": detail})


def _compare(checks, name, predicted, enumerated):
    status = "pass" if predicted == enumerated else "fail"
    _add(checks, name, status,
         "predicted=%s enumerated=%s" % (predicted, enumerated))


def _histogram_identity_checks(checks, part):
    ok = sum(Fraction(v, n) for n, v in part.n_hist.items()) == part.j_count
    _add(checks, "n_histogram_identity", "pass" if ok else "fail",
         "sum N[n]/n = %s vs %d j-classes"
         % (sum(Fraction(v, n) for n, v in part.n_hist.items()), part.j_count))
    if part.m_hist is None:
        _add(checks, "m_histogram_identity", "skipped",
             "no isomorphism census at this size")
        return
    ok = sum(Fraction(v, k) for k, v in part.m_hist.items()) == part.iso_count
    _add(checks, "m_histogram_identity", "pass" if ok else "fail",
         "sum M[k]/k = %s vs %d classes"
         % (sum(Fraction(v, k) for k, v in part.m_hist.items()),
            part.iso_count))


def _class_size_checks(checks, family, q, part):
    first_j = first_i = None
    for u in part.param_to_j:
        want = formulas.predicted_class_size(family, "J", q, u)
        got = len(part.j_class_of(u))
        if want != got and first_j is None:
            first_j = (u, want, got)
        want = formulas.predicted_class_size(family, "I", q, u)
        got = len(part.iso_class_of(u))
        if want != got and first_i is None:
            first_i = (u, want, got)
    n = part.param_count
    for name, bad in (("j_class_sizes", first_j), ("iso_class_sizes", first_i)):
        if bad is None:
            _add(checks, name, "pass",
                 "%d parameters match the case table" % n)
        else:
            _add(checks, name, "fail",
                 "parameter %r: predicted size %d, enumerated %d" % bad)


def _identity_sweep_checks(checks, family, q, part, F):
    if F.p <= 3:
        _add(checks, "difference_factorization", "skipped",
             "identity defined for characteristic > 3")
        return
    if q > IDENTITY_SWEEP_MAX_Q:
        _add(checks, "difference_factorization", "skipped",
             "pairwise sweep bounded at q <= %d" % IDENTITY_SWEEP_MAX_Q)
        return
    params = list(part.param_to_j)
    bad = None
    for u in params:
        for v in params:
            if not difference_factorization_check(family, F, u, v):
                bad = (u, v)
                break
        if bad:
            break
    if bad is None:
        _add(checks, "difference_factorization", "pass",
             "%d parameter pairs" % (len(params) ** 2))
    else:
        _add(checks, "difference_factorization", "fail",
             "first failing pair %r" % (bad,))


def verify_family(family, q, *, stable=False, unguarded=False):
    """One report record: run the census for (family, q) and compare every
    enumerated quantity with its closed form."""
    t0 = time.monotonic()
    checks = []
    record = {
        "family": family,
        "q": q,
        "J": {"predicted": None, "enumerated": None},
        "I": {"predicted": None, "enumerated": None},
        "N_hist": None,
        "M_hist": None,
        "checks": checks,
        "elapsed_ms": 0,
    }

    def done():
        if not stable:
            record["elapsed_ms"] = int((time.monotonic() - t0) * 1000)
        return record

    F = field_of_order(q)

    if family == "short-weierstrass":
        if F.p <= 3:
            _add(checks, "baseline_class_count", "skipped",
                 "defined only for characteristic > 3")
        elif q > GUARDS["short-weierstrass"] and not unguarded:
            _add(checks, "baseline_class_count", "skipped",
                 "guarded at q <= %d" % GUARDS["short-weierstrass"])
        else:
            predicted = formulas.predicted_baseline(q)
            enumerated = baseline_short_weierstrass_census(
                q, unguarded=True)
            record["I"] = {"predicted": predicted, "enumerated": enumerated}
            _compare(checks, "baseline_class_count", predicted, enumerated)
        return done()

    fam = get_family(family)
    if not fam.supports(F):
        _add(checks, "compatibility", "skipped",
             "%s curves are undefined in characteristic %d" % (family, F.p))
        return done()
    two_param = family == "generalized-hessian"
    guard = GUARDS[family]
    if q > guard and not unguarded:
        _add(checks, "resource_guard", "skipped",
             "census guarded at q <= %d" % guard)
        return done()

    part = census(family, q, unguarded=unguarded)
    full_scan = part.iso_classes is not None
    record["N_hist"] = part.n_hist
    record["M_hist"] = part.m_hist

    record["J"] = {"predicted": formulas.predicted_J(family, q),
                   "enumerated": part.j_count}
    _compare(checks, "j_count", record["J"]["predicted"], part.j_count)
    record["I"] = {"predicted": formulas.predicted_I(family, q),
                   "enumerated": part.iso_count}
    if part.iso_count is None:
        _add(checks, "iso_count", "skipped",
             "isomorphism census guarded at q <= %d"
             % GUARDS["generalized-hessian-iso"])
    else:
        _compare(checks, "iso_count", record["I"]["predicted"], part.iso_count)

    if two_param and not full_scan:
        _add(checks, "parameter_count", "skipped",
             "j-only census visits one v per cube coset")
    else:
        _compare(checks, "parameter_count",
                 formulas.predicted_parameter_count(family, q),
                 part.param_count)
    _histogram_identity_checks(checks, part)

    if family in ("legendre", "hessian"):
        _class_size_checks(checks, family, q, part)
        _identity_sweep_checks(checks, family, q, part, F)

    if family == "legendre":
        want = {k: v for k, v in formulas.predicted_Mk_table(q).items() if v}
        status = "pass" if want == part.m_hist else "fail"
        _add(checks, "m_histogram_row", status,
             "predicted %r enumerated %r (q %% 24 = %d)"
             % (want, part.m_hist, q % 24))
        counts = s_ij_census(q, unguarded=True)
        wanted = {sij: formulas.predicted_s_ij(q, *sij) for sij in counts}
        status = "pass" if wanted == counts else "fail"
        _add(checks, "character_pairs", status,
             "predicted %s enumerated %s"
             % (sorted(wanted.items()), sorted(counts.items())))

    if family == "hessian":
        if F.p > 3 and q <= IDENTITY_SWEEP_MAX_Q:
            bad = [u for u in part.param_to_j
                   if not hessian_quartic_disc_check(F, u)]
            _add(checks, "quartic_discriminant_identity",
                 "pass" if not bad else "fail",
                 "%d parameters" % part.param_count if not bad
                 else "fails at %r" % bad[:3])
        else:
            _add(checks, "quartic_discriminant_identity", "skipped",
                 "characteristic > 3 and q <= %d only" % IDENTITY_SWEEP_MAX_Q)

    if F.p > 3:
        _add(checks, "closed_form_j_agreement", "pass",
             "model j matched the closed form on all %d parameters "
             "during enumeration" % part.param_count)
    else:
        _add(checks, "closed_form_j_agreement", "skipped",
             "no closed form in characteristic %d" % F.p)

    if family in ("jacobi-quartic", "jacobi-intersection"):
        base = census("legendre", q, unguarded=unguarded)
        ok = (part.j_count == base.j_count
              and part.iso_count == base.iso_count)
        _add(checks, "legendre_count_agreement", "pass" if ok else "fail",
             "J %d vs %d, I %d vs %d" % (part.j_count, base.j_count,
                                         part.iso_count, base.iso_count))

    if two_param:
        if part.iso_count is not None and q % 3 == 1:
            _compare(checks, "iso_equals_j_plus_2",
                     part.j_count + 2, part.iso_count)
        else:
            _add(checks, "iso_equals_j_plus_2", "skipped",
                 "applies when cube roots of unity exist"
                 if q % 3 != 1 else "no isomorphism census at this size")
        if full_scan:
            _add(checks, "rep_full_j_agreement", "pass",
                 "one v per cube coset realized every j "
                 "(asserted during enumeration)")
        else:
            _add(checks, "rep_full_j_agreement", "skipped",
                 "full-v scan not performed at this size")
        if q % 3 == 1:
            bad = None
            for v in F.cube_coset_reps()[1:]:
                if len({gh_rational_F(F, v, u) for u in range(q)}) != q:
                    bad = v
                    break
            _add(checks, "fv_injectivity", "pass" if bad is None else "fail",
                 "every non-cube v" if bad is None
                 else "collision for v=%d" % bad)
        else:
            _add(checks, "fv_injectivity", "skipped",
                 "every v is a cube when q is not 1 mod 3")
        if q > GUARDS["points"]:
            _add(checks, "point_count_divisibility", "skipped",
                 "point counting guarded at q <= %d" % GUARDS["points"])
        else:
            fam_gh = get_family("generalized-hessian")
            if q <= POINT_CHECK_EXHAUSTIVE_Q:
                curves = list(fam_gh.parameters(F))
            else:
                rng = random.Random(q)
                pool = list(fam_gh.parameters(F))
                curves = [pool[rng.randrange(len(pool))]
                          for _ in range(POINT_CHECK_SAMPLES)]
            bad = None
            for uv in curves:
                n = projective_point_count(
                    CurveDescriptor("generalized-hessian", uv, F))
                if n % 3 != 0:
                    bad = (uv, n)
                    break
            _add(checks, "point_count_divisibility",
                 "pass" if bad is None else "fail",
                 "%d curves, all counts divisible by 3" % len(curves)
                 if bad is None else "curve %r has %d points" % bad)

    return done()


# ---------------------------------------------------------------------------
# report rendering


def emit_report(records, fmt):
    """Render verify records; byte-stable for fixed inputs."""
    if fmt == "json":
        return json.dumps(records, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "q", "check", "status", "detail"])
        for r in records:
            for c in r["checks"]:
                writer.writerow([r["family"], r["q"], c["name"],
                                 c["status"], c["detail"]])
        return buf.getvalue()
    lines = []
    width = max((len(c["name"]) for r in records for c in r["checks"]),
                default=10)
    totals = {"pass": 0, "fail": 0, "skipped": 0}
    for r in records:
        lines.append("%s q=%d  J %s/%s  I %s/%s  [%dms]" % (
            r["family"], r["q"],
            r["J"]["enumerated"], r["J"]["predicted"],
            r["I"]["enumerated"], r["I"]["predicted"],
            r["elapsed_ms"]))
        for c in r["checks"]:
            totals[c["status"]] += 1
            lines.append("  %-*s  %-7s  %s" % (width, c["name"],
                                               c["status"], c["detail"]))
    lines.append("%d checks: %d passed, %d failed, %d skipped" % (
        sum(totals.values()), totals["pass"], totals["fail"],
        totals["skipped"]))
    return "\n".join(lines) + "\n"


def _records_pass(records):
    return all(c["status"] != "fail" for r in records for c in r["checks"])


# ---------------------------------------------------------------------------
# argument handling


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="curvecensus",
        description="enumerate elliptic-curve families over small fields "
                    "and verify the closed-form class counts")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add_common(p, with_family=True):
        if with_family:
            p.add_argument("--family", action="append", dest="families",
                           choices=VERIFY_FAMILIES + ("all",),
                           help="family to visit; repeatable; default all")
        p.add_argument("--q", action="append", dest="qs", type=int,
                       metavar="Q", help="prime power to visit; repeatable")
        p.add_argument("--q-max", dest="q_max", type=int, metavar="N",
                       help="visit every prime power up to N")
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--stable", action="store_true",
                       help="deterministic output: timings reported as 0")
        p.add_argument("--unsafe-no-guard", action="store_true",
                       dest="unguarded", help="lift the census size guards")
        p.add_argument("--output", metavar="PATH",
                       help="write the report here instead of stdout")

    pv = sub.add_parser("verify", help="compare enumerations with the "
                                       "closed forms")
    add_common(pv)
    pv.add_argument("--fail-fast", action="store_true",
                    help="stop after the first failing (family, q) record")
    pv.add_argument("--jobs", type=int, default=1, metavar="N",
                    help="run (family, q) cells on N worker processes")

    pc = sub.add_parser("census", help="dump one family's class partition")
    add_common(pc)

    pl = sub.add_parser("classes", help="list isomorphism classes")
    pl.add_argument("--family", required=True, choices=FAMILY_NAMES)
    pl.add_argument("--q", type=int, required=True)
    pl.add_argument("--format", choices=FORMATS, default="text")
    pl.add_argument("--unsafe-no-guard", action="store_true",
                    dest="unguarded")
    pl.add_argument("--output", metavar="PATH")

    pf = sub.add_parser("fields", help="list prime-power fields")
    pf.add_argument("--q-max", dest="q_max", type=int, required=True,
                    metavar="N")
    pf.add_argument("--format", choices=FORMATS, default="text")
    pf.add_argument("--output", metavar="PATH")
    return parser


def _resolve_qs(args):
    if args.qs and args.q_max:
        raise UsageError("--q and --q-max are mutually exclusive")
    if args.qs:
        for q in args.qs:
            if q < 2 or not is_prime_power(q):
                raise UsageError("%d is not a prime power" % q)
        return sorted(set(args.qs))
    if args.q_max:
        if args.q_max < 2:
            raise UsageError("--q-max must be at least 2")
        return prime_powers(args.q_max)
    raise UsageError("one of --q or --q-max is required")


def _resolve_families(args):
    fams = args.families or ["all"]
    if "all" in fams:
        return list(VERIFY_FAMILIES)
    seen = []
    for f in fams:
        if f not in seen:
            seen.append(f)
    return seen


def _write(text, args):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def _verify_job(job):
    family, q, stable, unguarded = job
    return verify_family(family, q, stable=stable, unguarded=unguarded)


def cmd_verify(args):
    qs = _resolve_qs(args)
    families = _resolve_families(args)
    jobs = [(f, q, args.stable, args.unguarded)
            for f in families for q in qs]
    records = []
    if args.jobs > 1 and len(jobs) > 1 and not args.fail_fast:
        with Pool(args.jobs) as pool:
            records = pool.map(_verify_job, jobs, chunksize=1)
    else:
        for job in jobs:
            record = _verify_job(job)
            records.append(record)
            if args.fail_fast and not _records_pass([record]):
                break
    _write(emit_report(records, args.format), args)
    return 0 if _records_pass(records) else 1


def cmd_census(args):
    qs = _resolve_qs(args)
    families = [f for f in _resolve_families(args)
                if f != "short-weierstrass"]
    documents = []
    for family in families:
        fam = get_family(family)
        for q in qs:
            if not fam.supports(field_of_order(q)):
                continue
            part = census(family, q, unguarded=args.unguarded)
            doc = {
                "family": family,
                "q": q,
                "param_count": part.param_count,
                "J_count": part.j_count,
                "I_count": part.iso_count,
                "N_hist": part.n_hist,
                "M_hist": part.m_hist,
                "representatives": None if part.iso_classes is None
                else sorted(cls[0] for cls in part.iso_classes.values()),
            }
            documents.append((doc, part))
    if args.format == "json":
        text = json.dumps([d for d, _ in documents], indent=2,
                          sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "q", "param", "j",
                         "j_class_size", "iso_class_size"])
        for doc, part in documents:
            for u in sorted(part.param_to_j):
                writer.writerow([
                    doc["family"], doc["q"], u, part.param_to_j[u],
                    len(part.j_class_of(u)),
                    "" if part.iso_classes is None
                    else len(part.iso_class_of(u))])
        text = buf.getvalue()
    else:
        lines = []
        for doc, _ in documents:
            lines.append("%s q=%d: %d parameters, %d j-classes, "
                         "%s isomorphism classes" % (
                             doc["family"], doc["q"], doc["param_count"],
                             doc["J_count"], doc["I_count"]))
            lines.append("  N_hist %r" % (doc["N_hist"],))
            lines.append("  M_hist %r" % (doc["M_hist"],))
        text = "\n".join(lines) + "\n"
    _write(text, args)
    return 0


def cmd_classes(args):
    q = _resolve_qs(argparse.Namespace(qs=[args.q], q_max=None))[0]
    family = args.family
    fam = get_family(family)
    if not fam.supports(field_of_order(q)):
        raise UsageError("%s is undefined in characteristic %d"
                         % (family, field_of_order(q).p))
    part = census(family, q, unguarded=args.unguarded)
    if part.iso_classes is None:
        raise UsageError("isomorphism census guarded at this size; "
                         "use --unsafe-no-guard")
    listing = sorted(
        ({"representative": cls[0], "j": part.param_to_j[cls[0]],
          "size": len(cls), "members": cls}
         for cls in part.iso_classes.values()),
        key=lambda e: (e["j"], e["members"]))
    if args.format == "json":
        text = json.dumps({"family": family, "q": q, "classes": listing},
                          indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "q", "j", "representative", "size",
                         "members"])
        for e in listing:
            writer.writerow([family, q, e["j"], e["representative"],
                             e["size"],
                             " ".join(str(m) for m in e["members"])])
        text = buf.getvalue()
    else:
        lines = ["%s over GF(%d): %d isomorphism classes"
                 % (family, q, len(listing))]
        for e in listing:
            lines.append("  j=%s rep=%s size=%d members=%s"
                         % (e["j"], e["representative"], e["size"],
                            e["members"]))
        text = "\n".join(lines) + "\n"
    _write(text, args)
    return 0


def cmd_fields(args):
    if args.q_max < 2:
        raise UsageError("--q-max must be at least 2")
    rows = []
    for q in prime_powers(args.q_max):
        F = field_of_order(q)
        rows.append({"q": q, "p": F.p, "k": F.k,
                     "modulus": F.modulus_str()})
    if args.format == "json":
        text = json.dumps(rows, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["q", "p", "k", "modulus"])
        for r in rows:
            writer.writerow([r["q"], r["p"], r["k"], r["modulus"]])
        text = buf.getvalue()
    else:
        lines = ["%6d = %d^%d  %s" % (r["q"], r["p"], r["k"], r["modulus"])
                 for r in rows]
        text = "\n".join(lines) + "\n"
    _write(text, args)
    return 0


_DISPATCH = {
    "verify": cmd_verify,
    "census": cmd_census,
    "classes": cmd_classes,
    "fields": cmd_fields,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return _DISPATCH[args.command](args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
