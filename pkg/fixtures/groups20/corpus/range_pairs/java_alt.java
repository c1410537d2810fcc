import java.util.HashMap;
import java.util.Map;

static Map<Integer, Integer> rangePairs(int n) {
    int k = n > 6 ? 6 : n;
    Map<Integer, Integer> pairs = new HashMap<Integer, Integer>();
    int i = 0;
    while (i < k) {
        pairs.put(i, i * i);
        i++;
    }
    return pairs;
}
