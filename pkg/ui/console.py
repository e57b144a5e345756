"""
Console - plain-text rendering of tables and summaries for the terminal
TSV for convergence tables, a boxed summary for corpus runs
"""
from typing import List, Sequence

from invariants.convergence import ConvergenceTable
from services.corpus import CorpusSummary

RULE = "=" * 60


class ConsoleRenderer:
    """Formats results as text; never writes anywhere itself."""

    def tsv(self, rows: Sequence[Sequence[str]]) -> str:
        return "".join("\t".join(row) + "\n" for row in rows)

    def convergence(self, table: ConvergenceTable) -> str:
        """
        Header plus one row per t, then comment lines for the run.

        Args:
            table: finished or partial convergence table

        Returns:
            str: TSV text ending in a newline
        """
        text = self.tsv(table.as_rows())
        footer = [f"# change: {table.change.render()}", f"# trend: {table.trend}"]
        if table.error:
            footer.append(f"# stopped: {table.error}")
        return text + "".join(line + "\n" for line in footer)

    def corpus(self, summary: CorpusSummary) -> str:
        lines: List[str] = [RULE, f"Corpus seed {summary.seed}"]
        for suite, count in summary.counts.items():
            lines.append(f"  {suite:<12} {count:>5} items")
        lines.append(f"  checks run   {summary.checks_run:>5}")
        lines.append(RULE)
        if summary.ok:
            lines.append("✓ No invariant violations")
        else:
            lines.append(f"❌ {len(summary.violations)} violations")
            for finding in summary.violations:
                lines.append(f"  {finding.suite} #{finding.index} {finding.check}: {finding.detail}")
        lines.append(RULE)
        return "\n".join(lines) + "\n"
