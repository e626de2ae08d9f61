"""Crossref works API adapter.

Count-only access: every request carries rows=0 and the parser never touches
message.items, so no record-level content (titles, authors, identifiers) can
enter the process. Aggregation happens server-side via total-results and
facets.

Etiquette for the public API: a mailto parameter on every request, at most
two concurrent requests, 100 ms minimum spacing, Retry-After honored on
429/503, and a TTL response cache so repeated benchmark queries do not
re-fetch.
"""

from __future__ import annotations

import json
import threading
import time
from typing import Callable, Optional
from urllib.parse import quote_plus, urlencode

from scholarlens.core.errors import SourceError
from scholarlens.core.types import TimeRange
from scholarlens.datasources.base import (
    DataSource,
    FacetBucket,
    check_facet_args,
    check_year_span,
)

CROSSREF_WORKS_URL = "https://api.crossref.org/works"

# dimension -> Crossref facet field
FACET_FIELDS = {
    "venue": "container-title",
    "publisher": "publisher-name",
    "work_type": "type-name",
}

DEFAULT_TTL_SECONDS = 3600.0
MIN_REQUEST_INTERVAL = 0.1
MAX_CONCURRENT_REQUESTS = 2
MAX_ATTEMPTS = 3
RETRY_AFTER_CAP = 30.0

# transport(url) -> (status_code, headers, body_text)
Transport = Callable[[str], tuple[int, dict, str]]


def build_works_request(
    subject: Optional[str],
    *,
    mailto: str,
    time_range: Optional[TimeRange] = None,
    facet: Optional[tuple[str, int]] = None,
) -> str:
    """Deterministic works-endpoint URL. rows=0 always; mailto always last."""
    params: list[tuple[str, str]] = []
    if subject is not None:
        params.append(("query.bibliographic", subject))
    params.append(("rows", "0"))
    if time_range is not None:
        params.append(
            (
                "filter",
                f"from-pub-date:{time_range.from_year}-01-01,"
                f"until-pub-date:{time_range.until_year}-12-31",
            )
        )
    if facet is not None:
        field, limit = facet
        params.append(("facet", f"{field}:{limit}"))
    params.append(("mailto", mailto))
    return CROSSREF_WORKS_URL + "?" + urlencode(params, safe=":,@", quote_via=quote_plus)


def parse_works_response(body: str) -> tuple[int, dict[str, list[FacetBucket]]]:
    """Extract total-results and facet buckets; message.items is never read."""
    try:
        payload = json.loads(body)
    except (json.JSONDecodeError, TypeError) as exc:
        raise SourceError(f"response is not JSON: {exc}") from exc
    message = payload.get("message") if isinstance(payload, dict) else None
    if not isinstance(message, dict) or "total-results" not in message:
        raise SourceError("response missing message.total-results")
    total = message["total-results"]
    if not isinstance(total, int) or total < 0:
        raise SourceError(f"bad total-results value: {total!r}")

    facets: dict[str, list[FacetBucket]] = {}
    for field, entry in (message.get("facets") or {}).items():
        values = entry.get("values") or {}
        buckets = [
            FacetBucket(label=str(label), count=int(count))
            for label, count in values.items()
        ]
        buckets.sort(key=lambda b: (-b.count, b.label))
        facets[field] = buckets
    return total, facets


def _requests_transport(url: str) -> tuple[int, dict, str]:
    import requests

    resp = requests.get(url, timeout=30)
    return resp.status_code, dict(resp.headers), resp.text


class _RateLimiter:
    """Bounds concurrency and enforces minimum spacing between requests."""

    def __init__(self, max_concurrent: int, min_interval: float):
        self._slots = threading.Semaphore(max_concurrent)
        self._gate = threading.Lock()
        self._min_interval = min_interval
        self._next_allowed = 0.0

    def __enter__(self):
        self._slots.acquire()
        with self._gate:
            wait = self._next_allowed - time.monotonic()
            if wait > 0:
                time.sleep(wait)
            self._next_allowed = time.monotonic() + self._min_interval
        return self

    def __exit__(self, *exc_info):
        self._slots.release()
        return False


class CrossrefSource(DataSource):
    """Live scholarly-metadata source backed by the Crossref works endpoint."""

    source_name = "crossref"

    def __init__(
        self,
        mailto: str,
        transport: Optional[Transport] = None,
        ttl_seconds: float = DEFAULT_TTL_SECONDS,
    ):
        super().__init__()
        if not mailto.strip():
            raise ValueError("a contact mailto address is required")
        self.mailto = mailto
        self._transport = transport or _requests_transport
        self._ttl = ttl_seconds
        self._cache: dict[str, tuple[float, str]] = {}
        self._cache_lock = threading.Lock()
        self._limiter = _RateLimiter(MAX_CONCURRENT_REQUESTS, MIN_REQUEST_INTERVAL)
        self._size_estimate: Optional[int] = None
        self.request_log: list[str] = []

    def _fetch(self, url: str) -> str:
        now = time.monotonic()
        with self._cache_lock:
            hit = self._cache.get(url)
            if hit is not None and hit[0] > now:
                return hit[1]

        last_error = "exhausted retries"
        for attempt in range(MAX_ATTEMPTS):
            with self._limiter:
                self.request_log.append(url)
                self.stats.requests += 1
                try:
                    status, headers, body = self._transport(url)
                except Exception as exc:
                    last_error = f"network failure: {exc}"
                    status = None
            if status is not None and status == 200:
                with self._cache_lock:
                    self._cache[url] = (time.monotonic() + self._ttl, body)
                return body
            if status in (429, 503):
                last_error = f"HTTP {status}"
                retry_after = headers.get("Retry-After") if status else None
                try:
                    delay = min(float(retry_after), RETRY_AFTER_CAP)
                except (TypeError, ValueError):
                    delay = MIN_REQUEST_INTERVAL * (attempt + 1)
                if attempt < MAX_ATTEMPTS - 1:
                    time.sleep(delay)
            elif status is not None:
                raise SourceError(f"HTTP {status} from {CROSSREF_WORKS_URL}")
        raise SourceError(f"{last_error} after {MAX_ATTEMPTS} attempts")

    def _query(
        self,
        subject: Optional[str],
        time_range: Optional[TimeRange] = None,
        facet: Optional[tuple[str, int]] = None,
    ) -> tuple[int, dict[str, list[FacetBucket]]]:
        url = build_works_request(
            subject, mailto=self.mailto, time_range=time_range, facet=facet
        )
        return parse_works_response(self._fetch(url))

    def count_total(self, subject: str, time_range: Optional[TimeRange] = None) -> int:
        if not subject.strip():
            raise ValueError("subject must be non-empty")
        total, _ = self._query(subject, time_range)
        return total

    def yearly_counts(
        self, subject: str, from_year: int, until_year: int
    ) -> list[tuple[int, int]]:
        # Portable path: one rows=0 count per year. Crossref has no stable
        # published-year facet, so per-year date filters are the reliable route.
        check_year_span(from_year, until_year)
        out = []
        for year in range(from_year, until_year + 1):
            total, _ = self._query(subject, TimeRange(year, year))
            out.append((year, total))
        return out

    def facet_counts(self, subject: str, dimension: str, limit: int) -> list[FacetBucket]:
        check_facet_args(dimension, limit)
        if not subject.strip():
            raise ValueError("subject must be non-empty")
        field = FACET_FIELDS[dimension]
        _, facets = self._query(subject, facet=(field, limit))
        return facets.get(field, [])[:limit]

    def dataset_size_estimate(self) -> int:
        if self._size_estimate is None:
            total, _ = self._query(None)
            self._size_estimate = total
        return self._size_estimate
