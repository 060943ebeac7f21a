import json
import sys
from collections import Counter

from config import REPORT_FILE


def summarize(path: str = REPORT_FILE) -> Counter:
    """Status counts of a JSON-lines report file; an absent file counts nothing."""
    counts: Counter = Counter()
    try:
        with open(path, 'r') as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                try:
                    counts[json.loads(line).get("status", "unknown")] += 1
                except json.JSONDecodeError:
                    counts["unreadable"] += 1
    except FileNotFoundError:
        pass
    return counts


def extract_summary(path: str = REPORT_FILE) -> str:
    """Summary line "P passed / F failed / R refused" for a report file."""
    counts = summarize(path)
    return f"{counts['passed']} passed / {counts['failed']} failed / {counts['refused']} refused"


if __name__ == "__main__":
    report_path = sys.argv[1] if len(sys.argv) > 1 else REPORT_FILE
    print(extract_summary(report_path))
    sys.exit(1 if summarize(report_path)["failed"] else 0)
