def all_odds(n):
    odds = []
    n = range(n)
    for i in n:
        if i % 2 == 1:
            odds.append(i)
    return odds
