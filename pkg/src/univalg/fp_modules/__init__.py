"""Finitely presented modules, homomorphisms, kernels, cokernels and tensor products."""

from .modules import (HomError, ModuleElement, ModuleHom, PresentedModule, cokernel, compose, describe_module,
                      identity, image, kernel, prune, zero_hom)
from .tensor import (DirectSum, TensorCertificate, TensorProduct, direct_sum, hom_tensor, swap,
                     tensor_hom, tensor_product, tensor_zero_certificate, verify_tensor_certificate)
