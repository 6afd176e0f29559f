; x = 0; while (x < n) x = x + 1;
(system
  (vars (x Int) (n Int))
  (init (= x 0))
  (tr (and (< x n) (= x' (+ x 1)) (= n' n))))
