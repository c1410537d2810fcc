import java.util.ArrayList;
import java.util.List;

static List<Integer> cumulativeList(int n) {
    List<Integer> sums = new ArrayList<Integer>();
    int total = 0;
    for (int i = 0; i < n; i++) {
        total += i;
        sums.add(total);
    }
    return sums;
}
