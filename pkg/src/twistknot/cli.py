"""Command-line front end: ``twistknot <command> ...`` (also ``python -m twistknot``)."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .braidcore import BraidSyntaxError, garside_normal_form, is_twist_positive, parse_braid, format_braid
from .burau import (
    PreconditionError,
    alexander,
    baker_kegel_certificate,
    bridge_braid_certificate,
    check_twist_positive_form,
    reduced_burau,
)
from .concordance import distinctness_report, same_tau_family, signature_ledger, ttk_label
from .goeritz import goeritz_family_matrix, signature_closed_form, signature_gordon_litherland
from .verify import Config, run_all


def _emit(cfg: Config, text: str, payload: dict | list | None = None):
    if cfg.output_format == 'json' and payload is not None:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_alex(cfg: Config, args) -> int:
    b = parse_braid(args.braid)
    a = alexander(b)
    _emit(cfg, str(a), {'braid': format_braid(b), 'alexander': str(a), 'exponents': a.exponents})
    return 0


def cmd_burau(cfg: Config, args) -> int:
    b = parse_braid(args.braid)
    m = reduced_burau(b)
    _emit(cfg, str(m), {'braid': format_braid(b), 'matrix': [[str(x) for x in r] for r in m.rows]})
    return 0


def cmd_nf(cfg: Config, args) -> int:
    b = parse_braid(args.braid)
    nf = garside_normal_form(b)
    tp = is_twist_positive(b)
    _emit(cfg, f'{nf}\ntwist_positive={tp}', {
        'braid': format_braid(b), 'infimum': nf.infimum,
        'factors': [x.word().to_ints() for x in nf.factors], 'twist_positive': tp,
    })
    return 0


def cmd_signature(cfg: Config, args) -> int:
    cf = signature_closed_form(args.k, args.m)
    gl = signature_gordon_litherland(args.k, args.m)
    _emit(cfg, f'closed_form={cf} gordon_litherland={gl}',
          {'k': args.k, 'm': args.m, 'closed_form': cf, 'gordon_litherland': gl})
    return 0 if cf == gl else 1


def cmd_goeritz(cfg: Config, args) -> int:
    data = goeritz_family_matrix(args.k, args.m)
    text = f"G'\n{data.full.dump()}\n\nG\n{data.reduced.dump()}\n\nmu={data.mu}"
    _emit(cfg, text, {'full': data.full.to_ints(), 'reduced': data.reduced.to_ints(), 'mu': data.mu})
    return 0


def cmd_family(cfg: Config, args) -> int:
    fam = same_tau_family(args.q)
    ledger = signature_ledger(args.q)
    lines = [f'{ttk_label(kp, m)} signature={sig}' for (kp, m), sig in ledger]
    _emit(cfg, '\n'.join(lines), [{'label': ttk_label(kp, m), 'k_param': kp, 'm': m, 'signature': sig}
                                  for (kp, m), sig in ledger])
    return 0 if len(fam) == len(ledger) else 1


def cmd_report(cfg: Config, args) -> int:
    rep = distinctness_report(args.q)
    if cfg.output_format == 'csv':
        sys.stdout.write(rep.to_csv())
    elif cfg.output_format == 'json':
        print(rep.to_json())
    else:
        print(f'q={rep.q} genus={rep.genus} members={len(rep.members)} verdict: {rep.verdict}')
        for r in rep.members:
            print(f'  {r.label} writhe={r.writhe} tau={r.tau} signature={r.signature} Delta={r.alexander}')
        for p in rep.pairs:
            print(f'  {rep.members[p.i].label} / {rep.members[p.j].label}: {p.verdict} ({p.detail})')
    return 0 if rep.verdict == 'pairwise distinct' else 1


def cmd_cert(cfg: Config, args) -> int:
    if args.baker_kegel is not None:
        cert = baker_kegel_certificate(args.baker_kegel)
    elif args.form:
        cert = check_twist_positive_form(parse_braid(args.braid))
    else:
        cert = bridge_braid_certificate(parse_braid(args.braid), lspace_assumed=True)
    print(cert.to_json())
    return 0 if cert.ok else 1


def cmd_verify(cfg: Config, args) -> int:
    if cfg.output_format == 'json':
        results = run_all(cfg)
        print(json.dumps([r.as_dict() for r in results], indent=2))
    else:
        def show(r):
            print(r.line(), flush=True)
            for f in r.failures[:10]:
                print(f'    falsified: {f}')
        results = run_all(cfg, on_result=show)
        failed = sum(not r.passed for r in results)
        print(f'{len(results) - failed} passed, {failed} failed')
    return 0 if all(r.passed for r in results) else 1


def _global_flags(default) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False, argument_default=default)
    p.add_argument('--format', dest='output_format', choices=('json', 'csv', 'text'))
    p.add_argument('--q-max', type=int)
    p.add_argument('--k-max', type=int)
    p.add_argument('--m-max', type=int)
    p.add_argument('--fail-fast', action='store_true', default=default)
    p.add_argument('--config', help='JSON config file (default: $TWISTKNOT_CONFIG)')
    return p


def build_parser() -> argparse.ArgumentParser:
    # Flags are accepted before or after the subcommand; the subcommand copy uses SUPPRESS
    # so an absent flag there does not clobber one given earlier.
    common = _global_flags(argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog='twistknot', parents=[_global_flags(None)],
                                     description='Braid, Alexander polynomial and signature computations.')
    sub = parser.add_subparsers(dest='command', required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add('alex', cmd_alex, 'Alexander polynomial of a braid closure').add_argument('braid')
    add('burau', cmd_burau, 'reduced Burau matrix').add_argument('braid')
    add('nf', cmd_nf, 'Garside normal form and twist positivity').add_argument('braid')
    for name, func, help_ in (('signature', cmd_signature, 'signature of T(3,3k+1;2m) two ways'),
                              ('goeritz', cmd_goeritz, "Goeritz matrices G', G and mu for T(3,3k+1;2m)")):
        p = add(name, func, help_)
        p.add_argument('k', type=int)
        p.add_argument('m', type=int)
    add('family', cmd_family, 'same-genus family of T(3,q) with signatures').add_argument('q', type=int)
    add('report', cmd_report, 'concordance distinctness report for the genus class of T(3,q)').add_argument('q', type=int)
    p = add('cert', cmd_cert, 'bridge/braid index certificate as JSON')
    p.add_argument('braid', nargs='?')
    p.add_argument('--baker-kegel', type=int, default=None, metavar='N')
    p.add_argument('--form', action='store_true', help='only the twist positive Alexander form report')
    add('verify', cmd_verify, 'run every reproducibility check')
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config.load(args.config, output_format=args.output_format, q_max=args.q_max,
                          k_max=args.k_max, m_max=args.m_max, fail_fast=args.fail_fast)
    except (ValueError, OSError) as exc:
        print(f'config error: {exc}', file=sys.stderr)
        return 2
    if args.command == 'cert' and args.baker_kegel is None and not args.braid:
        parser.error('cert needs a braid or --baker-kegel N')
    try:
        return args.func(cfg, args)
    except BraidSyntaxError as exc:
        print(f'parse error: {exc}', file=sys.stderr)
        return 2
    except (PreconditionError, ValueError) as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 2
