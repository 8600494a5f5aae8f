from nodal_kstab.emitters.base import EmitterPlugin
from nodal_kstab.emitters.dispatcher import dispatch_emit, list_plugins

__all__ = ["EmitterPlugin", "dispatch_emit", "list_plugins"]
