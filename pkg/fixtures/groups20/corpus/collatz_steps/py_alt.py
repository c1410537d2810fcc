def collatz_steps(n):
    if n < 1:
        return 0
    steps = 0
    k = n
    while k != 1:
        if steps >= 100:
            break
        if k % 2 == 0:
            k //= 2
        else:
            k = 3 * k + 1
        steps += 1
    return steps
