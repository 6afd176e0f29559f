; the secret flows into the public counter
(system
  (vars (h Int) (lo Int))
  (tr (and (= lo' (+ lo h)) (= h' h))))
