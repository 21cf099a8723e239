"""Settings: built-in defaults, overlaid by config/settings.json, then env."""
import json
import os
from pathlib import Path
from typing import Any, Optional

DEFAULT_SETTINGS: dict[str, Any] = {
    "sweep": {
        "n_min": 3,
        "n_max": 31,
        "t": "all",
        "workers": 0,
        "oracle": False,
    },
    "oracle": {
        "max_vertices": 48,
        "max_steps": 100_000_000,
    },
    "storage": {
        "db": "data/dpham.db",
    },
}


def _merge_dict(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        base_value = merged.get(key)
        if isinstance(base_value, dict) and isinstance(value, dict):
            merged[key] = _merge_dict(base_value, value)
        else:
            merged[key] = value
    return merged


def _config_dir() -> Path:
    return Path(__file__).resolve().parent.parent / "config"


def load_settings(path: Optional[Path] = None) -> dict[str, Any]:
    """Load settings.json over the defaults; fall back to defaults on any problem."""
    config_path = path or _config_dir() / "settings.json"
    if not config_path.exists():
        return DEFAULT_SETTINGS
    try:
        with open(config_path, "r", encoding="utf-8") as f:
            user_config = json.load(f)
    except (OSError, json.JSONDecodeError):
        return DEFAULT_SETTINGS
    if not isinstance(user_config, dict):
        return DEFAULT_SETTINGS
    return _merge_dict(DEFAULT_SETTINGS, user_config)


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value > 0 else None


def default_workers(settings: dict[str, Any]) -> int:
    """Configured worker count (0 means one per CPU), capped by DPHAM_WORKERS."""
    configured = int(settings.get("sweep", {}).get("workers", 0) or 0)
    workers = configured if configured > 0 else (os.cpu_count() or 1)
    cap = _env_int("DPHAM_WORKERS")
    if cap is not None:
        workers = min(workers, cap)
    return max(1, workers)


def default_db_path(settings: dict[str, Any]) -> Path:
    db_path = os.environ.get("DPHAM_DB")
    if db_path:
        return Path(db_path)
    return Path(settings.get("storage", {}).get("db", DEFAULT_SETTINGS["storage"]["db"]))
