# ============================================================
# 📁 File: commands/__init__.py
# 📍 Location: asymclust/commands/__init__.py
# 📝 Description: Commands package with all subcommand exports
# ============================================================

"""
asymclust Commands Package
One module per CLI subcommand.
"""

from commands.cluster import register_cluster_handlers, cluster_command
from commands.ingest import register_ingest_handlers, ingest_command
from commands.trust import register_trust_handlers, trust_command
from commands.verify import register_verify_handlers, verify_command
from commands.compare import register_compare_handlers, compare_command


# ============================================================
# 📦 All Exports
# ============================================================

__all__ = [
    "register_cluster_handlers",
    "cluster_command",
    "register_ingest_handlers",
    "ingest_command",
    "register_trust_handlers",
    "trust_command",
    "register_verify_handlers",
    "verify_command",
    "register_compare_handlers",
    "compare_command",
    "register_all_command_handlers",
]


# ============================================================
# 🔧 Convenience Function
# ============================================================

def register_all_command_handlers(subparsers) -> None:
    """
    Register every subcommand at once.

    Args:
        subparsers: The action returned by ArgumentParser.add_subparsers
    """
    register_cluster_handlers(subparsers)
    register_ingest_handlers(subparsers)
    register_trust_handlers(subparsers)
    register_verify_handlers(subparsers)
    register_compare_handlers(subparsers)
