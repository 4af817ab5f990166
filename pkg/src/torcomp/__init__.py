"""torcomp: exact-arithmetic workbench for torsion, local cohomology and derived completion.

Subpackages
-----------
exactnum   -- bigint/rational/prime-field scalars and matrix kernels (SNF, rank/kernel)
plocal     -- the symbolic p-local module calculus over A = Z_(p), I = (p)
gradedpoly -- graded polynomial rings: Groebner bases, syzygies, resolutions, Ext/Tor
complexes  -- bounded chain complexes, Koszul/Cech objects, weak proregularity
localcoh   -- torsion, local cohomology (dual routes), derived completion towers
duality    -- theorem verifiers: GM SES, Grothendieck duality, adjunction, idempotence
comod      -- Hopf algebroid comodules: cobar Ext, comodule torsion/limits/completion
cli        -- command-line front end and report harness
"""

__version__ = "0.1.0"
