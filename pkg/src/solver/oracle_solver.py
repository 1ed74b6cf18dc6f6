"""
Verbs backed by the brute-force oracle: enumerate, scan.
"""

from ..combinatorics import compositions_up_to, format_composition, partitions
from ._solver import BaseSolver, Command, OutputDocument

SCANS = ("uniqueness", "negative")


def _fmt(alpha) -> str:
    return format_composition(alpha, trim=True)


def scan_corpus(max_weight: int, max_length: int, use_partitions: bool):
    if use_partitions:
        return [p for w in range(max_weight + 1) for p in partitions(w, max_length)]
    return list(compositions_up_to(max_weight, max_length))


class OracleSolver(BaseSolver):
    def enumerate(self, command: Command) -> OutputDocument:
        alpha = self.composition(command, "alpha")
        m, n = self.factor(command)
        search = self.cfg.oracle.enumerate(
            alpha,
            m,
            n,
            n_max=command.get("nmax"),
            mode=command.get("mode"),
            extended=bool(command.get("extended")),
        )
        lines = [
            f"{search.bounds.mode} search for {_fmt(alpha)} with {m}κ+{n}, N_max={search.bounds.n_max}"
            + ("" if search.complete else " (incomplete)"),
            f"{len(search)} partners",
        ]
        lines += [f"  {_fmt(beta)}" for beta in search]
        return self.emit(command, search.to_dict(), "\n".join(lines))

    def scan(self, command: Command) -> OutputDocument:
        kind = command.get("kind")
        if kind not in SCANS:
            raise ValueError(f"unknown scan {kind!r}, expected one of {SCANS}")
        scan_cfg = self.cfg.scan or {}
        corpus = scan_corpus(
            command.get("max_weight", scan_cfg.get("max_weight", 4)),
            command.get("max_length", scan_cfg.get("max_length", 3)),
            bool(command.get("partitions", scan_cfg.get("partitions", False))),
        )

        if kind == "uniqueness":
            report = self.cfg.oracle.uniqueness_scan(corpus, command.get("nmax"))
            records = report.to_records()
            lines = [f"uniqueness scan over {len(corpus)} compositions: {len(report.flagged)} flagged"]
            for r in report.records:
                mark = " FLAGGED" if r.flagged else ""
                lines.append(
                    f"  {_fmt(r.alpha)}  {r.reduced[0]}κ+{r.reduced[1]}  {r.section}  "
                    f"partners={r.count}{mark}"
                )
        else:
            report = self.cfg.oracle.negative_existence_scan(corpus)
            records = report.to_records()
            lines = [
                f"negative existence scan over {len(corpus)} compositions: "
                f"{report.checked} pairs, {report.parallel} parallel, {len(report.violations)} violations"
            ]
            lines += [f"  {_fmt(v.alpha)} ⊳ {_fmt(v.beta)}  m={v.m} n={v.n}" for v in report.violations]
        return self.emit_lines(command, records, "\n".join(lines))
