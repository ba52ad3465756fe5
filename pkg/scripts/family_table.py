"""Print the (e, a) family table with the chain audit at each row.

    python3 scripts/family_table.py --e-max 8 --a-max 14
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from noetherline.family import audit_noether_chain, enumerate_certificates


@dataclass(frozen=True)
class TableConfig:
    e_max: int = 8
    a_max: int = 14
    kobayashi_only: bool = False


def rows(cfg: TableConfig):
    for cert in enumerate_certificates(range(cfg.e_max + 1), range(cfg.a_max + 1)):
        if cfg.kobayashi_only and not cert.kobayashi_subfamily:
            continue
        audit = audit_noether_chain(cert.p_g, cert.deg_Sigma, Fraction(cert.p_g - 4, 3))
        yield (cert.e, cert.a, cert.region, "*" if cert.kobayashi_subfamily else "",
               cert.K_cubed, cert.p_g, cert.k, cert.deg_Sigma, "tight" if audit.all_tight else "slack")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--e-max", type=int, default=TableConfig.e_max)
    parser.add_argument("--a-max", type=int, default=TableConfig.a_max)
    parser.add_argument("--kobayashi-only", action="store_true")
    cfg = TableConfig(**vars(parser.parse_args()))

    header = ("e", "a", "region", "kob", "K3", "pg", "k", "degSigma", "chain")
    body = [tuple(map(str, r)) for r in rows(cfg)]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    for line in [header] + body:
        print("  ".join(x.rjust(w) for x, w in zip(line, widths)))
    print(f"\n{len(body)} pairs")


if __name__ == "__main__":
    main()
