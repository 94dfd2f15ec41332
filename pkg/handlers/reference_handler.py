# handlers/reference_handler.py
# Handler for the published comparison tables kept under metadata/

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml
from loguru import logger
from pydantic import BaseModel, Field

from state.semigroup_state import CodeRecord

Row = Tuple[int, int, int, int, int]


class TableDiff(BaseModel):
    """Rows present on only one side of a comparison"""

    q: int
    missing: List[Row] = Field(default_factory=list)
    extra: List[Row] = Field(default_factory=list)

    @property
    def matches(self) -> bool:
        return not self.missing and not self.extra


class ReferenceTableHandler:
    """Handler for published (rho_l, n, n-l, d1, d2) rows"""

    def __init__(self, path: Optional[Path] = None):
        """
        Initialize reference handler

        Args:
            path: YAML file to read; defaults to metadata/published_tables.yaml
        """
        self.path = path or Path(__file__).parent.parent / "metadata" / "published_tables.yaml"
        self.metadata = self.load_metadata()

    def load_metadata(self) -> Dict[str, Any]:
        """
        Load published tables from YAML

        Returns:
            Parsed metadata dictionary
        """
        try:
            with open(self.path, "r") as f:
                return yaml.safe_load(f) or {"tables": {}}
        except FileNotFoundError:
            logger.warning(f"published_tables.yaml not found at {self.path}")
            return {"tables": {}}
        except Exception as e:
            logger.error(f"Error loading published tables: {str(e)}")
            return {"tables": {}}

    def available(self) -> List[int]:
        """Field sizes with a published table"""
        return sorted(int(q) for q in self.metadata.get("tables", {}))

    def length(self, q: int) -> Optional[int]:
        """Code length used by the published table for q"""
        table = self.metadata.get("tables", {}).get(q)
        return table.get("length") if table else None

    def rows(self, q: int) -> List[Row]:
        """
        Published rows for q, sorted by rho_l

        Args:
            q: Field size

        Returns:
            Row tuples; empty when nothing is published for q
        """
        table = self.metadata.get("tables", {}).get(q)
        if not table:
            return []
        return sorted(tuple(int(value) for value in row) for row in table.get("rows", []))

    def diff(self, q: int, records: List[CodeRecord]) -> TableDiff:
        """
        Compare computed rows against the published ones as multisets

        Args:
            q: Field size
            records: Computed comparison rows

        Returns:
            TableDiff listing rows missing from or extra to the computation
        """
        published = self.rows(q)
        computed = sorted(record.as_row() for record in records)

        missing = list(published)
        extra = []
        for row in computed:
            if row in missing:
                missing.remove(row)
            else:
                extra.append(row)

        result = TableDiff(q=q, missing=missing, extra=extra)
        if result.matches:
            logger.info(f"q={q}: {len(computed)} rows match the published table")
        else:
            logger.warning(f"q={q}: {len(missing)} published rows missing, {len(extra)} extra rows")
        return result
