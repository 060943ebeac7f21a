"""
Display names used in reports, CSV rows and the CLI `construct` command.
Keep in sync with FamilyKind in type/family.py.
"""

FAMILY_KIND_MAPPING = {
    "path": "P_{n}",
    "cycle": "C_{n}",
    "T": "T_{{{n},{delta}}}",
    "U": "U_{{{n},{delta}}}",
    "spider": "spider(legs={legs})",
    "cycle_with_paths": "C_{cycle_len}+paths(legs={legs})",
}


def get_family_kind_name(kind: str, **params) -> str:
    if kind not in FAMILY_KIND_MAPPING:
        raise ValueError(f"Invalid family kind: {kind}")
    return FAMILY_KIND_MAPPING[kind].format(**params)
