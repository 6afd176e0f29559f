; public output never reads the secret
(system
  (vars (h Int) (lo Int))
  (tr (and (= lo' (+ lo 1)) (= h' (* 2 h)))))
