"""Statement names attached to report verdicts.

Every verdict emitted by a report names the result it certifies or relies
on.  The strings name statements, never numbered locations.
"""

CLOSED_FIELD = "S0 condition (i): assumed, k algebraically closed of characteristic 0"
S0_DEF = "Definition of the class S0 of exact sequences"
S0_II = "S0 condition (ii): the sum of all irreducible N-representations extends to G"
S0_III = "S0 condition (iii): H-equivariant bijection C(N) = Irr(N), tested via stabilizer collections"
SPLIT = "theta-vanishing criterion: theta = 0 iff the sum of Irr(N) extends to G"
BRTRIV = "Brauer-triviality lemma (automatic over a closed field)"
ADEQUATE = "S0-adequacy: every stabilizer sequence of a point belongs to S0"
THEOREM_A = "Main theorem: for S0-adequate X, mu^G(X) = mu(X/^ex G)"
EXPLFREE = "free-action decomposition: coh^G(X) = sum over Irr(N)/H of coh(X/H_r)"
EXTQUOT = "extended quotient: inertia quotient, equal to the union of X^g/Z(g)"
INERTIA = "inertia endomorphism: iner {X}^G = sum over C(G) of {X^g}^Z(g)"
ORBIFOLD_EULER = "orbifold Euler characteristic as gamma composed with iterated inertia"
GS_THEOREM = "Galkin-Shinder zeta identity"
GS_PROP = "symmetric-power extended quotient decomposition over partitions"
GS_ADEQUACY = "the Sigma_n-variety X^n is S0-adequate"
XI = "skew group algebra isomorphism xi: O(H)*G = End_N(O(G))"
HEIS = "Heisenberg lemma: the class of the cyclic algebra C_{zeta^-1} equals theta_zeta"
TAU = "tau measure: tau(A) = log |A_tors|"
TAU0 = "tau subadditivity lemma"
TAU_SS = "spectral sequence tau lemma"
PROD_AH = "Kunneth lemma for a torsion-free second factor"
BOUND = "torsion bound for Severi-Brauer fibrations: tau(K1(E)) < d tau(K1(B))"
MAIN_EXAMPLE = "counterexample theorem: tau kappa_1(mu^G(X)) < tau kappa_1(mu(X/^ex G))"
CLASSES = "conjugacy classes of Sigma_n are indexed by partitions"
CENTRALIZER = "centralizer of g_partition in Sigma_n"
PLUMBING = "artifact plumbing (no statement certified)"
