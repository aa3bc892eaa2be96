"""
Configuration loader for the Hom-Lie CoDer toolkit
Loads and manages config/global.yaml
"""
import yaml
from fractions import Fraction
from pathlib import Path
from typing import Dict, Any, List


class Config:
    """Global configuration manager"""

    def __init__(self, config_path: str = None):
        """
        Load configuration from YAML file

        Args:
            config_path: Path to global.yaml, defaults to config/global.yaml
        """
        if config_path is None:
            # Default to project root/config/global.yaml
            project_root = Path(__file__).parent.parent.parent
            config_path = project_root / "config" / "global.yaml"

        self.config_path = Path(config_path)
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load YAML configuration file"""
        if not self.config_path.exists():
            raise FileNotFoundError(f"Config file not found: {self.config_path}")

        with open(self.config_path, 'r') as f:
            return yaml.safe_load(f) or {}

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value by dot-notation key

        Args:
            key: Dot-notation key (e.g., 'search.max_candidates')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        keys = key.split('.')
        value = self.config

        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
                if value is None:
                    return default
            else:
                return default

        return value

    def get_max_candidates(self) -> int:
        """Get the brute-force search guard"""
        return int(self.get('search.max_candidates', 10_000_000))

    def get_default_grid(self) -> List[Fraction]:
        """Get the default scalar grid for operator search"""
        return [Fraction(str(v)) for v in self.get('search.default_grid', ['-1', '0', '1'])]

    def get_search_max_dim(self) -> int:
        return int(self.get('search.max_dim', 3))

    def get_generation_settings(self) -> Dict[str, int]:
        """Get instance generation limits"""
        return {
            'max_dim': int(self.get('generation.max_dim', 4)),
            'max_attempts': int(self.get('generation.max_attempts', 50)),
            'coefficient_range': int(self.get('generation.coefficient_range', 2)),
        }

    def get_format_version(self) -> str:
        return str(self.get('io.format_version', '1'))

    def get_indent(self):
        indent = self.get('io.indent')
        return int(indent) if indent is not None else None

    def get_log_dir(self) -> Path:
        """
        Get log directory path

        Relative paths are resolved against the project root.
        """
        project_root = Path(__file__).parent.parent.parent
        log_dir = Path(self.get('logging.log_dir', 'logs'))
        if not log_dir.is_absolute():
            log_dir = project_root / log_dir
        return log_dir

    def reload(self):
        """Reload configuration from file"""
        self.config = self._load_config()


# Global config instance
_config = None


def get_config() -> Config:
    """Get global configuration instance (singleton)"""
    global _config
    if _config is None:
        _config = Config()
    return _config
