//! Fixed declarations and axioms of the point-model encodings. Each
//! constant is parsed once and spliced into emitted problems unchanged.

/// Shared by every monoidal problem.
pub(super) const MONOIDAL: &str = "
thf(c_type, type, (
  c: $tType )).
thf(one, type, (
  one: c )).
thf(alpha_decl, type, (alpha: c > c )).
thf(iden_decl, type, (iden: c > c )).
thf(multo_decl, type, (multo: c > c > c )).
thf(multm_decl, type, (multm: (c > c) > (c > c) > (c > c) )).
thf(axio1, axiom, (! [X: c, Y: c, Z: c] :
  ( alpha @ (multo @ (multo @ X @ Y) @ Z) = (multo @ X @ (multo @ Y @ Z))
) )).
thf(axio2, axiom, (! [X: c] :
  ( ( iden @ X ) = X ) )).
";

/// Added when a unitor occurs.
pub(super) const MONOIDAL_UNITORS: &str = "
thf(left_decl,type,(left: c > c )).
thf(right_decl,type,(right: c > c )).
thf(axio2A,axiom,(! [X: c] :
      ( (left @ (multo @ one @ X)) = X      ))).
thf(axio2B,axiom,(! [X: c] :
      ( (right @ (multo @ X @ one)) = X      ))).
";

pub(super) const NATURALITY: &str = "
thf(c_type,type,(c: $tType )).
thf(cc_type,type,(cc: $tType )).
thf(braid_decl,type,(braid: cc > cc )).
thf(up_decl,type,(up: c > c )).
thf(down_decl,type,(down: c > c )).
thf(multo_decl,type,(multo: c > c > cc )).
thf(multm_decl,type,(multm: (c > c) > (c > c) > (cc > cc) )).
thf(axio,axiom,(! [X:c, Y:c, F: c > c, G: c > c]:
  ( ((multm @ F @ G) @ (multo @ X @ Y)) = (multo @ (F @ X) @ (G @ Y))
  ))).
thf(axio1,axiom,(! [X:c, Y:c]:
  ( (braid @ (multo @ X @ Y)) = (multo @ (up @ Y) @ (down @ X))
  ))).
thf(axio1A,axiom,(! [X:c, F:c > c]:
  ( (F @ (up @ X)) = (up @ (F @ X))
  ))).
thf(axio1B,axiom,(! [X:c, F:c > c]:
  ( (F @ (down @ X)) = (down @ (F @ X))
  ))).
";

pub(super) const BRAID_INVERSE: &str = "
thf(c_type,type,(c: $tType)).
thf(cc_type,type,(cc: $tType)).
thf(braid_decl,type,(braid: cc > cc)).
thf(up_decl,type,(up: c > c)).
thf(down_decl,type,(down: c > c)).
thf(invbraid_decl,type,(invbraid: cc > cc)).
thf(iden_decl,type,(iden: c > c)).
thf(multo_decl,type,(multo: c > c > cc )).
thf(multm_decl,type,(multm: (c > c) > (c > c) > (cc > cc) )).
thf(axio0,axiom,(![X:c]:( (iden @ X) = (X) ))).
thf(axio,axiom,(![X:c, Y:c, F: c > c, G: c > c]:
  ( (multm @ F @ G) @ (multo @ X @ Y) = (multo @ (F @ X) @ (G @ Y))
  ))).
thf(axio1,axiom,(![X:c, Y:c]:
  ( (braid @ (multo @ X @ Y)) = (multo @ (up @ Y) @ (down @ X))
  ))).
thf(axio1A,axiom,(![X:c, Y:c]:
  ( (invbraid @ (multo @ X @ Y)) = (multo @ (down @ Y) @ (up @ X))
  ))).
thf(axio2,axiom,(![X:c]:
  ( (up @ (up @ X)) = (X) ))).
thf(axio2A,axiom,(![X:c]:
  ( (down @ (down @ X)) = (X) ))).
";

pub(super) const HEXAGON: &str = "
thf(c_type,type,(c: $tType )).
thf(cc_type,type,(cc: $tType )).
thf(ccxc_type,type,(ccxc: $tType )).
thf(cxcc_type,type,(cxcc: $tType )).
thf(alpha_decl,type,(alpha: ccxc > cxcc )).
thf(invalpha_decl,type,(invalpha: cxcc > ccxc )).
thf(braid_decl,type,(braid: cc > cc )).
thf(up_decl,type,(up: c > c )).
thf(down_decl,type,(down: c > c )).
thf(up1_decl,type,(up1: cc > cc )).
thf(down1_decl,type,(down1: cc > cc )).
thf(invbraid_decl,type,(invbraid: cc > cc )).
thf(braid1_decl,type,(braid1: cxcc > ccxc )).
thf(braid2_decl,type,(braid2: ccxc > cxcc )).
thf(iden_decl,type,(iden: c > c )).
thf(multo_decl,type,(multo: c > c > cc )).
thf(multo1_decl,type,(multo1: cc > c > ccxc )).
thf(multo2_decl,type,(multo2: c > cc > cxcc )).
thf(multm_decl,type,(multm: (c > c) > (c > c) > (cc > cc) )).
thf(multm1_decl,type,(multm1: (cc > cc) > (c > c) > (ccxc > ccxc) )).
thf(multm2_decl,type,(multm2: (c > c) > (cc > cc) > (cxcc > cxcc) )).
thf(axio0,axiom,(![X:c]:( iden @ X ) = (X) )).
thf(axio0A,axiom,(![X:c]:( down @ (down @ X) ) = (X) )).
thf(axio0B,axiom,(![X:c]:( up @ (up @ X) ) = (X) )).
thf(axio,axiom,(![X:c, Y:c, F: c > c, G: c > c]:
  ( ((multm @ F @ G) @ (multo @ X @ Y)) = (multo @ (F @ X) @ (G @ Y))
  ))).
thf(axioA,axiom,(![X:c, Y:c,Z:c, F: cc > cc, G: c > c]:
  ( ((multm1 @ F @ G) @ (multo1 @ (multo @ X @ Y) @ Z)) = (multo1 @ (F @
  (multo @ X @ Y)) @ (G @ Z))
  ))).
thf(axioAA,axiom,(![X:c, Y:c,Z:c, F: c > c, G: cc > cc]:
  ( ((multm2 @ F @ G) @ (multo2 @ X @ (multo @ Y @ Z) ) ) = (multo2 @ (F @
  X) @ (G @ (multo @ Y @ Z))
  )))).
thf(axio1,axiom,(![X:c, Y:c]:
  ( (braid @ (multo @ X @ Y)) = (multo @ (up @ Y) @ (down @ X))
  ))).
thf(axio1A,axiom,(![X:c, Y:c]:
  ( (invbraid @ (multo @ X @ Y)) = (multo @ (down @ Y) @ (up @ X))
  ))).
thf(axio1B,axiom,(![X:c, Y:c,Z:c]:
  ( (braid1 @ (multo2 @ X @ (multo @ Y @ Z))) = (multo1 @ (up1 @ (multo @ Y
  @ Z) ) @ (down @ X))
  ))).
thf(axio1C,axiom,(![X:c, Y:c,Z:c]:
  ( (braid2 @ (multo1 @ (multo @ X @ Y) @ Z ) ) = (multo2 @ (up @ Z) @
  (down1 @ (multo @ X @ Y) )
  )))).
thf(axio2,axiom,(![X:c, Y:c, Z:c]:
  ( alpha @ (multo1 @ (multo @ X @ Y) @ Z) ) = (multo2 @ X @ (multo @ Y @ Z
  )
  ))).
thf(axio2A,axiom,(![X:c, Y:c, Z:c]:
  ( (invalpha @ (multo2 @ X @ (multo @ Y @ Z) ) ) = (multo1 @ (multo @ X @ Y)
  @ Z)
  ))).
";

pub(super) const YANG_BAXTER: &str = "
thf(c_type,type,(c: $tType)).
thf(cc_type,type,(cc: $tType)).
thf(ccxc_type,type,(ccxc: $tType)).
thf(cxcc_type,type,(cxcc: $tType)).
thf(alpha_decl,type,(alpha: ccxc > cxcc)).
thf(invalpha_decl,type,(invalpha: cxcc > ccxc)).
thf(braid_decl,type,(braid: cc > cc)).
thf(up_decl,type,(up: c > c)).
thf(down_decl,type,(down: c > c)).
thf(up1_decl,type,(up1: cc > cc)).
thf(down1_decl,type,(down1: cc > cc)).
thf(invbraid_decl,type,(invbraid: cc > cc)).
thf(braid1_decl,type,(braid1: cxcc > ccxc)).
thf(braid2_decl,type,(braid2: ccxc > cxcc)).
thf(iden_decl,type,(iden: c > c)).
thf(multo_decl,type,(multo: c > c > cc)).
thf(multo1_decl,type,(multo1: cc > c > ccxc)).
thf(multo2_decl,type,(multo2: c > cc > cxcc)).
thf(multm_decl,type,(multm: (c > c) > (c > c) > (cc > cc))).
thf(multm1_decl,type,(multm1: (cc > cc) > (c > c) > (ccxc > ccxc))).
thf(multm2_decl,type,(multm2: (c > c) > (cc > cc) > (cxcc > cxcc))).
thf(axio0,axiom,(![X:c]:( (iden @ X) = (X) ))).
thf(axio0A,axiom,(![X:c]:( (down @ (down @ X)) = (X) ))).
thf(axio0B,axiom,(![X:c]:( (up @ (up @ X)) = (X) ))).
thf(axio0C,axiom,(![X:c, F:c > c]:
  ( (F @ (up @ X)) = (up @ (F @ X))          ))).
thf(axio0D,axiom,(![X:c, F:c > c]:
  ( (F @ (down @ X)) = (down @ (F @ X))          ))).
thf(axio,axiom,(![X:c, Y:c, F: c > c, G: c > c]:
  ( ((multm @ F @ G) @ (multo @ X @ Y)) = (multo @ (F @ X) @ (G @ Y))
  ))).
thf(axioA,axiom,(![X:c, Y:c,Z:c, F: cc > cc, G: c > c]:
  ( ((multm1 @ F @ G) @ (multo1 @ (multo @ X @ Y) @ Z)) = (multo1 @ (F @
  (multo @ X @ Y)) @ (G @ Z))          ))).
thf(axioAA,axiom,(![X:c, Y:c,Z:c, F: c > c, G: cc > cc]:
  ( ((multm2 @ F @ G) @ (multo2 @ X @ (multo @ Y @ Z)) ) = (multo2 @ (F @
  X) @ (G @ (multo @ Y @ Z)) )          ))).
thf(axio1,axiom,(![X:c, Y:c]:
  ( (braid @ (multo @ X @ Y)) = (multo @ (up @ Y) @ (down @ X))
  ))).
thf(axio1A,axiom,(![X:c, Y:c]:
  ( (invbraid @ (multo @ X @ Y)) = (multo @ (down @ Y) @ (up @ X))
  ))).
thf(axio1B,axiom,(![X:c, Y:c,Z:c]:
  ( (braid1 @ (multo2 @ X @ (multo @ Y @ Z))) = (multo1 @ (up1 @ (multo @ Y
  @ Z )) @ (down @X))          ))).
thf(axio1C,axiom,(![X:c, Y:c,Z:c]:
  ( (braid2 @ (multo1 @ (multo @ X @ Y) @ Z )) = (multo2 @ (up @ Z) @
  (down1 @ (multo @ X @ Y )) )          ))).
thf(axio2,axiom,(![X:c, Y:c, Z:c]:
  ( (alpha @ (multo1 @ (multo @ X @ Y) @ Z)) = (multo2 @ X @ (multo @ Y @ Z
  ))          ))).
thf(axio2A,axiom,(![X:c, Y:c, Z:c]:
  ( (invalpha @ (multo2 @ X @ (multo @ Y @ Z)) ) = (multo1 @ (multo @ X @ Y)
  @ Z)          ))).
";

/// Declarations for the open atom; the closed atom's are derived by
/// renaming.
pub(super) const FROBENIUS_DECLS: &str = "
thf(alpha_decl,type,(alpha: $aaxa > $axaa)).
thf(invalpha_decl,type,(invalpha: $axaa > $aaxa )).
thf(mu_decl,type,(mu: $aa > $a )).
thf(eta_decl,type,(eta: $i > $a )).
thf(muid_decl,type,(muid: $aaxa > $aa )).
thf(idmu_decl,type,(idmu: $axaa > $aa )).
thf(etaid_decl,type,(etaid: $ja > $aa )).
thf(ideta_decl,type,(ideta: $ai > $aa )).
thf(lamb_decl,type,(lamb: $ja > $a )).
thf(rho_decl,type,(rho: $ai > $a )).
thf(delta_decl,type,(delta: $a > $aa )).
thf(deltaid_decl,type,(deltaid: $aa > $aaxa )).
thf(iddelta_decl,type,(iddelta: $aa > $axaa )).
thf(epsilon_decl,type,(epsilon: $a > $i )).
thf(invlamb_decl,type,(invlamb: $a > $ja )).
thf(invrho_decl,type,(invrho: $a > $ai )).
thf(epsilonid_decl,type,(epsilonid: $aa > $ja )).
thf(idepsilon_decl,type,(idepsilon: $aa > $ai )).
thf(id_decl,type,(id: $a > $a )).
";

/// Unit and counit facts stated with the inverse unitors.
pub(super) const FROBENIUS_EXTRA: &str = "
thf(axio9,axiom,(! [X: $a] :
  ( (mu @ (ideta @ (invrho @ X)) ) = (id @ X) ) )).
thf(axio10,axiom,(! [X: $a] :
  ( (mu @ (etaid @ (invlamb @ X)) ) = (id @ X) ) )).
thf(axio11,axiom,(! [X: $a] :
  ( (rho @ (idepsilon @ (delta @ X)) ) = (id @ X) ) )).
thf(axio12,axiom,(! [X: $a] :
  ( (lamb @ (epsilonid @ (delta @ X)) ) = (id @ X) ) )).
thf(axio13,axiom,(! [X: $a] :
  ( (id @ (id @ X) ) = (id @ X) ) )).
thf(axio14,axiom,(! [X: $a] :
  ( (delta @ (id @ X) ) = (delta @ X) ) )).
";
