"""Free resolutions, Tor and flatness checks."""

from .resolution import (Horseshoe, Resolution, ResolutionError, free_resolution, horseshoe, lift_hom,
                         lift_homotopy)
from .tor import (TorLES, TorResult, tensor_complex, tensor_complex_hom, tor, tor0_iso, tor_delta_naturality,
                  tor_independence_check, tor_les, tor_map)
from .flatness import FlatnessReport, ProbeEntry, flat_tor_probe, hypersurface_flat_check, truncated_model
