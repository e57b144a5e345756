"""
Report Manager - Write and load lctforge JSON reports
Enhanced with backup and schema validation
"""
import json
import logging
import shutil
import sys
from functools import lru_cache
from pathlib import Path
from typing import Optional, Type, TypeVar

import jsonschema
from pydantic import BaseModel, ValidationError

from core.errors import InternalConsistencyError, LctForgeError

logger = logging.getLogger(__name__)

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "schemas" / "report.json"

ReportT = TypeVar("ReportT", bound=BaseModel)


class ReportFormatError(LctForgeError):
    """A report file could not be read back."""


@lru_cache(maxsize=1)
def _schema() -> dict:
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


class ReportManager:
    """Serializes reports to stdout or a file, keeping a backup of the previous file."""

    def __init__(self, schema_path: Optional[Path] = None):
        self.schema_path = Path(schema_path) if schema_path else SCHEMA_PATH

    def _load_schema(self) -> dict:
        if self.schema_path == SCHEMA_PATH:
            return _schema()
        with open(self.schema_path, "r", encoding="utf-8") as f:
            return json.load(f)

    def to_document(self, report: BaseModel) -> dict:
        """
        Dump a report and validate it against the JSON schema.

        Args:
            report: Any report model from services.schemas

        Returns:
            dict: JSON-ready document
        """
        document = report.model_dump(mode="json")
        try:
            jsonschema.validate(document, self._load_schema())
        except jsonschema.ValidationError as e:
            # Models and schema are maintained together; a mismatch is a bug.
            raise InternalConsistencyError(
                f"report does not match schema at {list(e.absolute_path)}: {e.message}"
            ) from e
        return document

    def render(self, report: BaseModel) -> str:
        return json.dumps(self.to_document(report), indent=2, ensure_ascii=False) + "\n"

    def write(self, report: BaseModel, out: Optional[str] = None) -> str:
        """
        Write a validated report to `out`, or to stdout when `out` is None.

        Returns:
            str: The rendered JSON text
        """
        text = self.render(report)
        if out is None:
            sys.stdout.write(text)
            return text

        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        if path.exists():
            backup = path.with_name(path.name + ".bak")
            try:
                shutil.copy2(path, backup)
                logger.info("💾 Backup created: %s", backup)
            except OSError as e:
                logger.warning("⚠️ Backup failed: %s", e)

        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info("✓ Report written to: %s", path)
        return text

    def load(self, path: str, model: Type[ReportT]) -> ReportT:
        """
        Load a report file back into its model, validating on the way.

        Args:
            path: Report file path
            model: Expected report class

        Returns:
            The parsed report
        """
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ReportFormatError(f"corrupted report file {path}: {e}") from e

        try:
            jsonschema.validate(data, self._load_schema())
            report = model.model_validate(data)
        except (jsonschema.ValidationError, ValidationError) as e:
            raise ReportFormatError(f"invalid report file {path}: {e}") from e

        logger.info("✓ Report loaded from: %s", path)
        return report
