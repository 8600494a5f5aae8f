from nodal_kstab.utils.logger import get_logger, set_level
from nodal_kstab.utils.settings import Settings, load_settings

__all__ = ["Settings", "get_logger", "load_settings", "set_level"]
