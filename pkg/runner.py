import csv
import io
import json
import logging
import os
from typing import Iterable, List, Optional, Union

from config import SIGNIFICANT_DIGITS
from type.report import ReportStatus, Theorem, VerificationReport
from verify import verify_grid

CSV_COLUMNS = ["n", "delta", "alpha", "class", "brute_max", "bound", "gap", "n_extremal", "characterization_ok"]
TABLE_COLUMNS = ["n", "delta", "alpha", "class", "status", "brute_max", "bound", "gap", "n_extremal", "char_ok"]


def format_real(x: Optional[float], digits: int = SIGNIFICANT_DIGITS) -> str:
    return "" if x is None else f"{x:.{digits}g}"


class VerificationRunner:
    """
    Runs verification grids, keeps pass/fail/refused tallies and persists the reports as
    JSON lines plus a CSV summary.
    """
    def __init__(
        self,
        report_path: Optional[str] = None,
        summary_path: Optional[str] = None,
        workers: int = 1,
        ceiling: Optional[int] = None,
        timing: bool = False,
        digits: int = SIGNIFICANT_DIGITS,
    ) -> None:
        self.report_path = report_path
        self.summary_path = summary_path
        self.workers = workers
        self.ceiling = ceiling
        self.timing = timing
        self.digits = digits
        self.logger = self._setup_logger()

        self.reports: List[VerificationReport] = []
        self.passed = 0
        self.failed = 0
        self.refused = 0
        self.empty = 0

    @staticmethod
    def _setup_logger():
        # handlers come from the root logger configured in main.py
        return logging.getLogger('ChiVerifier')

    def get_passed_count(self) -> int:
        return self.passed

    def get_failed_count(self) -> int:
        return self.failed

    def get_refused_count(self) -> int:
        return self.refused

    def get_reports(self) -> List[VerificationReport]:
        return list(self.reports)

    def all_passed(self) -> bool:
        return self.get_failed_count() == 0

    def summary_line(self) -> str:
        line = f"{self.get_passed_count()} passed / {self.get_failed_count()} failed / {self.get_refused_count()} refused"
        if self.empty:
            line += f" / {self.empty} empty"
        return line

    def run(
        self,
        theorem: Union[int, str, Theorem],
        n_range: Iterable[int],
        alphas: Iterable[float],
        deltas: Optional[Iterable[int]] = None,
    ) -> List[VerificationReport]:
        reports = verify_grid(
            n_range, alphas, theorem, deltas=deltas, ceiling=self.ceiling, workers=self.workers
        )
        for report in reports:
            self._tally(report)
            if self.report_path:
                self.append_to_file(self.report_path, self.to_json_line(report))
        self.reports.extend(reports)
        if self.summary_path:
            self.write_csv(self.summary_path)
        self.logger.info(f"Verification finished: {self.summary_line()}")
        return reports

    def _tally(self, report: VerificationReport) -> None:
        if report.status is ReportStatus.PASSED:
            self.passed += 1
        elif report.status is ReportStatus.FAILED:
            self.failed += 1
            self.logger.error(
                f"n={report.n} delta={report.delta} alpha={report.alpha} failed, "
                f"violations: {report.violations}"
            )
        elif report.status is ReportStatus.REFUSED:
            self.refused += 1
            self.logger.info(f"Refused n={report.n} delta={report.delta} alpha={report.alpha}: {report.message}")
        else:
            self.empty += 1

    def to_json_line(self, report: VerificationReport) -> str:
        return json.dumps(report.to_dict(self.digits, self.timing))

    def csv_rows(self) -> List[List[str]]:
        rows = []
        for r in self.reports:
            rows.append([
                str(r.n), str(r.delta), format_real(r.alpha, self.digits), r.graph_class,
                format_real(r.brute_max, self.digits), format_real(r.bound, self.digits),
                format_real(r.relative_gap, self.digits), str(r.n_extremal),
                str(r.characterization_ok).lower(),
            ])
        return rows

    def render(self, fmt: str = "table") -> str:
        """Text of all collected reports in `fmt` (table, json or csv)."""
        if fmt == "json":
            return "".join(self.to_json_line(r) + "\n" for r in self.reports)
        if fmt == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            writer.writerows(self.csv_rows())
            return buffer.getvalue()
        if fmt != "table":
            raise ValueError(f"Invalid output format: {fmt}")

        rows = [TABLE_COLUMNS]
        for r in self.reports:
            rows.append([
                str(r.n), str(r.delta), format_real(r.alpha, 6), r.graph_class, r.status.value,
                format_real(r.brute_max, 10), format_real(r.bound, 10), format_real(r.relative_gap, 3),
                str(r.n_extremal), "yes" if r.characterization_ok else "no",
            ])
        widths = [max(len(row[i]) for row in rows) for i in range(len(TABLE_COLUMNS))]
        return "".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in rows)

    def write_csv(self, path: str) -> None:
        try:
            with open(path, 'w', newline='') as file:
                file.write(self.render("csv"))
            self.logger.info(f"Summary written to {path}")
        except OSError as e:
            self.logger.error(f"Error writing summary {path}: {e}")
            raise

    def append_to_file(self, filename: str, data: str) -> None:
        """Append data to a file."""
        try:
            with open(filename, 'a') as file:
                file.write(data + '\n')
            self.logger.debug(f"Data appended to {filename}")
        except OSError as e:
            self.logger.error(f"Error writing to file {filename}: {e}")
            raise

    def reset(self, clear_files: bool = True) -> None:
        self.reports = []
        self.passed = self.failed = self.refused = self.empty = 0
        if clear_files:
            for path in (self.report_path, self.summary_path):
                if path and os.path.exists(path):
                    os.remove(path)
