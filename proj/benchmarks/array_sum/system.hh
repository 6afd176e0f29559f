;  1 sum = 0;
;  2 b = *;
;  3 if (b > 0) {
;  4   i = 0;
;  5   while (i < n - 1) {
;  6     sum = sum + A[i];
;  7     i = i + 1; }
;    } else {
; 11   i = 1;
; 12   while (i < n) {
; 13     y = *;
; 14     sum = sum + A[i] + y;
; 15     i = i + 1; }
;    }
; 18 (exit)
; pc is the line about to run; both nondeterministic choices read the label.
(system
  (vars (pc Int) (sum Int) (b Int) (i Int) (n Int) (y Int) (A (Array Int Int)))
  (label (l Int))
  (init (= pc 1))
  (tr (or
    (and (= pc 1) (= pc' 2) (= sum' 0) (= b' b) (= i' i) (= n' n) (= y' y) (= A' A))
    (and (= pc 2) (= pc' 3) (= sum' sum) (= b' l) (= i' i) (= n' n) (= y' y) (= A' A))
    (and (= pc 3) (= pc' (ite (> b 0) 4 11)) (= sum' sum) (= b' b) (= i' i) (= n' n) (= y' y) (= A' A))
    (and (= pc 4) (= pc' 5) (= sum' sum) (= b' b) (= i' 0) (= n' n) (= y' y) (= A' A))
    (and (= pc 5) (= pc' (ite (< i (- n 1)) 6 18)) (= sum' sum) (= b' b) (= i' i) (= n' n) (= y' y) (= A' A))
    (and (= pc 6) (= pc' 7) (= sum' (+ sum (select A i))) (= b' b) (= i' i) (= n' n) (= y' y) (= A' A))
    (and (= pc 7) (= pc' 5) (= sum' sum) (= b' b) (= i' (+ i 1)) (= n' n) (= y' y) (= A' A))
    (and (= pc 11) (= pc' 12) (= sum' sum) (= b' b) (= i' 1) (= n' n) (= y' y) (= A' A))
    (and (= pc 12) (= pc' (ite (< i n) 13 18)) (= sum' sum) (= b' b) (= i' i) (= n' n) (= y' y) (= A' A))
    (and (= pc 13) (= pc' 14) (= sum' sum) (= b' b) (= i' i) (= n' n) (= y' l) (= A' A))
    (and (= pc 14) (= pc' 15) (= sum' (+ sum (select A i) y)) (= b' b) (= i' i) (= n' n) (= y' y) (= A' A))
    (and (= pc 15) (= pc' 12) (= sum' sum) (= b' b) (= i' (+ i 1)) (= n' n) (= y' y) (= A' A)))))
