; x = x + *  with * in {0, 1}
(system
  (vars (x Int))
  (label (l Int) (domain 0 1))
  (tr (= x' (+ x l))))
