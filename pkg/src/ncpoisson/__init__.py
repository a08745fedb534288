"""Double Poisson brackets on cobar algebras of cyclic A-infinity coalgebras.

Modules: ``linalg`` (exact rational linear algebra), ``tensor`` (graded words),
``ainf`` (A-infinity coalgebras, pairings, built-in examples), ``cobar``
(cobar algebra, cyclic bicomplex, one-forms, homology), ``double_poisson``
(the double bracket and its identities), ``gerstenhaber`` (Hochschild
cochains and the duality map), ``hkr`` (polynomial forms and polyvectors),
``parser`` and ``cli``.
"""
__version__ = "0.1.0"
