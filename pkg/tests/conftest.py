import os

# Symbolic discriminants for the larger signatures take a while to
# rebuild, so keep them on disk between runs unless the caller already
# picked a location.
if not os.environ.get("ELIMKIT_CACHE_DIR"):
    os.environ["ELIMKIT_CACHE_DIR"] = os.path.join(
        os.path.dirname(__file__), ".generic_cache"
    )
