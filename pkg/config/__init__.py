from .config import ConfigManager, DEFAULT_CONFIG_PATH
