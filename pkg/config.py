import os
from dotenv import load_dotenv

from errors import ConfigError

load_dotenv()

# ============================================================================
# SEARCH LIMITS
# ============================================================================

# Hard cap on the number of vertices any BFS may materialize
DEFAULT_VERTEX_CAP = 1_000_000

# Worker processes for profile searches (outputs never depend on this)
DEFAULT_JOBS = 1

# Branch-and-bound pruning in the profile search
PRUNE = os.getenv('ISOPX_PRUNE', '1') != '0'

# ============================================================================
# LOGGING
# ============================================================================

LOG_DIR = os.getenv('ISOPX_LOG_DIR', 'logs')
LOG_LEVEL = os.getenv('ISOPX_LOG_LEVEL', 'WARNING').upper()

# ============================================================================
# WINDOWS & SAMPLING
# ============================================================================

AUDIT_RADIUS = 4            # symmetry / degree audits run on B(rep, 4)
TRANSITIVITY_RADIUS = 3     # rooted-ball comparison radius for transitivity evidence
TRANSITIVITY_SAMPLES = 10
DISTORTION_WINDOW = 6       # quasitransitive reduction samples B(rep, 6)
DEFAULT_SEED = 42

# ============================================================================
# HELPER FUNCTIONS
# ============================================================================

def _int_setting(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} '{raw}' is not an integer", details={'setting': name, 'value': raw})


def get_vertex_cap():
    """Vertex cap, read from the environment on every call so late overrides apply"""
    return _int_setting('ISOPX_VERTEX_CAP', DEFAULT_VERTEX_CAP)


def get_jobs():
    return _int_setting('ISOPX_JOBS', DEFAULT_JOBS)


def validate_config():
    issues = []

    try:
        if get_vertex_cap() < 1:
            issues.append("ISOPX_VERTEX_CAP must be a positive integer")
    except ConfigError as e:
        issues.append(e.message)

    try:
        if get_jobs() < 1:
            issues.append("ISOPX_JOBS must be at least 1")
    except ConfigError as e:
        issues.append(e.message)

    if LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
        issues.append(f"ISOPX_LOG_LEVEL '{LOG_LEVEL}' is not a logging level")

    return issues
