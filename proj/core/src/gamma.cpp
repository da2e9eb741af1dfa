namespace ogcalc {}
