from __future__ import annotations

from os import getenv
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

LOG_LEVEL: str = getenv("LOG_LEVEL", "INFO")
FILE_DIR: Path = Path(getenv("FILE_DIR", "./files").rstrip("/"))
LOG_FILE: Path = FILE_DIR / "flagcohom.log"
WEYL_ORDER_BOUND: int = int(getenv("WEYL_ORDER_BOUND") or 1_000_000)
DEGREE_CAP_MARGIN: int = int(getenv("DEGREE_CAP_MARGIN") or 2)
DEFAULT_SEED: int = int(getenv("DEFAULT_SEED") or 0)
LEIBNIZ_SAMPLES: int = int(getenv("LEIBNIZ_SAMPLES") or 100)
THEOREM2_MULTIPLICITIES: tuple[int, ...] = tuple(
    int(x.strip()) for x in getenv("THEOREM2_MULTIPLICITIES", "2,4,8").split(",") if x.strip()
)
