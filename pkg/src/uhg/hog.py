"""Read-only House of Graphs client (keyword search + graph6 download).

Strictly optional: used for cross-checking catalog reconstructions against
the published graphs, never as a source of truth.  The transport is
injectable so everything is testable offline; real network failures raise
NetworkError, which the CLI maps to its own exit code.
"""

from __future__ import annotations

import json
from typing import Callable, Optional

from .canon import canonical_form
from .errors import UhgError
from .graphs import Graph

DEFAULT_ENDPOINT = "https://houseofgraphs.org"
DEFAULT_TIMEOUT = 20.0

Fetcher = Callable[[str, Optional[bytes], dict], bytes]


class NetworkError(UhgError):
    """The House of Graphs endpoint could not be reached or answered badly."""


def _default_fetcher(url: str, data: Optional[bytes], headers: dict) -> bytes:
    import urllib.error
    import urllib.request

    req = urllib.request.Request(url, data=data, headers=headers)
    try:
        with urllib.request.urlopen(req, timeout=DEFAULT_TIMEOUT) as resp:
            return resp.read()
    except (urllib.error.URLError, OSError, TimeoutError) as exc:
        raise NetworkError(f"request to {url} failed: {exc}") from exc


def _graph_ids(payload) -> list[int]:
    """Graph ids from an enquiry response, tolerant of schema variations."""
    ids: list[int] = []

    def walk(node):
        if isinstance(node, dict):
            for key in ("graphId", "graph_id", "id"):
                if key in node and isinstance(node[key], int):
                    ids.append(node[key])
                    break
            for v in node.values():
                walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)

    walk(payload)
    seen = set()
    out = []
    for i in ids:
        if i not in seen:
            seen.add(i)
            out.append(i)
    return out


def search_by_keyword(
    keyword: str,
    endpoint: str = DEFAULT_ENDPOINT,
    fetcher: Optional[Fetcher] = None,
    limit: int = 50,
) -> list[int]:
    """Ids of graphs whose text fields mention the keyword."""
    fetch = fetcher or _default_fetcher
    body = json.dumps(
        {
            "keywords": keyword,
            "mostPopular": -1,
            "mostRecent": -1,
            "subgraph": [],
            "invariantRange": [],
            "interestingInvariant": [],
        }
    ).encode()
    raw = fetch(
        f"{endpoint}/api/enquiry",
        body,
        {"Content-Type": "application/json", "Accept": "application/json"},
    )
    try:
        payload = json.loads(raw.decode("utf-8", errors="replace"))
    except json.JSONDecodeError as exc:
        raise NetworkError(f"enquiry response is not JSON: {exc}") from exc
    return _graph_ids(payload)[:limit]


def fetch_graph6(
    graph_id: int, endpoint: str = DEFAULT_ENDPOINT, fetcher: Optional[Fetcher] = None
) -> str:
    fetch = fetcher or _default_fetcher
    raw = fetch(f"{endpoint}/api/graphs/{graph_id}/graph6", None, {})
    return raw.decode("ascii", errors="replace").strip()


def match_against_catalog(
    lines: list[str], entries: dict[str, list[Graph]]
) -> dict[str, list[int]]:
    """Which catalog entries are isomorphic to which downloaded graphs.

    Returns entry name -> indices into `lines`.
    """
    from .codec import decode

    downloaded = []
    for i, line in enumerate(lines):
        try:
            g = decode(line)
        except UhgError:
            continue
        if isinstance(g, Graph):
            downloaded.append((i, canonical_form(g)))
    matches: dict[str, list[int]] = {}
    for name, graphs in entries.items():
        keys = {canonical_form(g) for g in graphs}
        hits = [i for i, c in downloaded if c in keys]
        if hits:
            matches[name] = hits
    return matches
