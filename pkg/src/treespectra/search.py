"""Sharded, resumable search over all trees up to a given order.

The search streams CatalogRecords for every tree passing the configured
filters.  A cursor file makes interrupted runs restartable without emitting
duplicates; shards partition the emitted stream round-robin so that the
union over shards equals an unsharded run.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional, TextIO

from .catalog import CatalogRecord
from .enumeration import EnumerationCursor, FreeTreeEnumerator
from .reduction import pendant_report
from .spectra import TreeSpectrum, nullity_matching


class CursorError(ValueError):
    """Resume state is unusable; the message says what to do."""


@dataclass
class SearchConfig:
    max_order: int
    nullity: Optional[int] = None
    integral_only: bool = False
    reduced_only: bool = False
    shard: tuple = (0, 1)
    out_path: Optional[str] = None
    resume_path: Optional[str] = None
    cursor_every: int = 100000

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("max order must be at least 1")
        index, count = self.shard
        if count < 1 or not 0 <= index < count:
            raise ValueError(f"invalid shard {self.shard}")
        if self.nullity is not None and self.nullity < 0:
            raise ValueError("nullity filter must be nonnegative")
        if self.cursor_every < 1:
            raise ValueError("cursor interval must be positive")

    def filters_key(self) -> dict:
        return {
            "max_order": self.max_order,
            "nullity": self.nullity,
            "integral_only": self.integral_only,
            "reduced_only": self.reduced_only,
            "shard": list(self.shard),
        }


def _load_resume(config: SearchConfig) -> Optional[dict]:
    path = config.resume_path
    if not path or not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            state = json.load(fh)
        if state["filters"] != config.filters_key():
            raise CursorError(
                "cursor file was written by a search with different "
                "parameters; delete it or point --resume elsewhere")
        state["cursor"] = (EnumerationCursor.from_json(json.dumps(state["cursor"]))
                          if state.get("cursor") else None)
        return state
    except CursorError:
        raise
    except Exception as exc:
        raise CursorError(
            f"cursor file {path!r} is corrupt ({exc}); delete it to start over")


def _save_cursor(config: SearchConfig, order: int,
                 cursor: Optional[EnumerationCursor], complete: bool) -> None:
    path = config.resume_path
    if not path:
        return
    state = {
        "filters": config.filters_key(),
        "order": order,
        "cursor": json.loads(cursor.to_json()) if cursor else None,
        "complete": complete,
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(state, fh)
    os.replace(tmp, path)


def run_search(config: SearchConfig, out: TextIO, err: TextIO) -> dict:
    """Run the search; returns {"per_order": {n: hits}, "scanned": total}."""
    resume = _load_resume(config)
    start_order = 1
    start_cursor: Optional[EnumerationCursor] = None
    if resume:
        if resume.get("complete"):
            print("search already complete per cursor file", file=err)
            return {"per_order": {}, "scanned": 0, "resumed_complete": True}
        start_order = resume["order"]
        start_cursor = resume["cursor"]

    shard_text = f"{config.shard[0]}/{config.shard[1]}"
    per_order: dict = {}
    scanned = 0
    for n in range(start_order, config.max_order + 1):
        if config.nullity is not None and (n - config.nullity) % 2:
            continue  # tree nullity always matches the order's parity
        cursor = start_cursor if n == start_order else None
        start_cursor = None
        enum = FreeTreeEnumerator(n, config.shard, cursor=cursor)
        hits = 0
        since_save = 0
        for tree in enum:
            scanned += 1
            since_save += 1
            if config.nullity is not None and nullity_matching(tree) != config.nullity:
                pass
            elif config.reduced_only and not pendant_report(tree).is_reduced:
                pass
            else:
                analysis = TreeSpectrum.analyze(tree)
                if config.nullity is not None and analysis.nullity != config.nullity:
                    raise AssertionError(
                        f"nullity routes disagree on {tree.code_str()}")
                if not config.integral_only or analysis.summary.is_integral:
                    record = CatalogRecord.from_tree(
                        tree, analysis, order_cap=config.max_order,
                        shard=shard_text,
                        timestamp=datetime.now(timezone.utc).isoformat(
                            timespec="seconds"))
                    out.write(record.to_json() + "\n")
                    hits += 1
            if since_save >= config.cursor_every:
                out.flush()
                _save_cursor(config, n, enum.cursor(), complete=False)
                since_save = 0
        per_order[n] = hits
        print(f"order {n}: {hits} matching trees", file=err)
        _save_cursor(config, min(n + 1, config.max_order), None,
                     complete=(n == config.max_order))
    print("order | matches", file=err)
    for n, hits in per_order.items():
        print(f"{n:5d} | {hits}", file=err)
    return {"per_order": per_order, "scanned": scanned}
